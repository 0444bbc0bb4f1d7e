#pragma once

#include <optional>
#include <vector>

#include "wpcas/ring.hpp"

namespace wpcas {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(RationalMatrix& m);

std::size_t rank(RationalMatrix m);

// Incrementally maintained row space of rational vectors of fixed length.
class RowSpace {
 public:
  explicit RowSpace(std::size_t dimension) : dim_(dimension) {}

  // Returns true if v was independent of the current space (and adds it).
  bool insert(std::vector<Rational> v);
  bool contains(std::vector<Rational> v) const;
  std::size_t rank() const { return rows_.size(); }

 private:
  void reduce(std::vector<Rational>& v) const;

  std::size_t dim_;
  std::vector<std::vector<Rational>> rows_;  // each normalised with pivot 1
  std::vector<std::size_t> pivots_;
};

}  // namespace wpcas
