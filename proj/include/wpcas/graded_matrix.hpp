#pragma once

#include <string>
#include <vector>

#include "wpcas/linalg.hpp"
#include "wpcas/poly.hpp"

namespace wpcas {

using ModuleVector = std::vector<Poly>;

// Matrix of polynomials with degree data: a map  ⊕ A(-col_j) -> ⊕ A(-row_i).
// Every nonzero entry (i, j) is homogeneous of degree col_j - row_i.
class GradedMatrix {
 public:
  // Zero matrix.
  GradedMatrix(RingPtr ring, std::vector<int> row_degrees, std::vector<int> col_degrees);
  // Throws std::invalid_argument when an entry violates the degree data.
  GradedMatrix(RingPtr ring, std::vector<int> row_degrees, std::vector<int> col_degrees,
               std::vector<std::vector<Poly>> entries);

  static GradedMatrix from_columns(RingPtr ring, std::vector<int> row_degrees, const std::vector<ModuleVector>& cols,
                                   std::vector<int> col_degrees);

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return row_deg_.size(); }
  std::size_t cols() const { return col_deg_.size(); }
  const std::vector<int>& row_degrees() const { return row_deg_; }
  const std::vector<int>& col_degrees() const { return col_deg_; }
  const Poly& at(std::size_t i, std::size_t j) const { return entries_.at(i).at(j); }

  ModuleVector column(std::size_t j) const;
  std::vector<ModuleVector> columns() const;

  bool is_zero() const;
  // First nonzero constant entry, scanning columns then rows.
  std::optional<std::pair<std::size_t, std::size_t>> find_unit_entry() const;

  // Transpose with degrees d -> shift - d, which keeps entry degrees.
  GradedMatrix transpose(int shift) const;
  GradedMatrix permute_rows(const std::vector<std::size_t>& order) const;
  GradedMatrix permute_cols(const std::vector<std::size_t>& order) const;
  GradedMatrix map_into(const RingPtr& target) const;

  RationalMatrix evaluate(const std::vector<Rational>& point) const;

  // Table of entry degrees, -1 marking zero entries.
  std::vector<std::vector<int>> weight_table() const;

  std::string to_string() const;

  friend GradedMatrix operator*(const GradedMatrix& a, const GradedMatrix& b);
  friend bool operator==(const GradedMatrix& a, const GradedMatrix& b);

 private:
  RingPtr ring_;
  std::vector<int> row_deg_;
  std::vector<int> col_deg_;
  std::vector<std::vector<Poly>> entries_;
};

}  // namespace wpcas
