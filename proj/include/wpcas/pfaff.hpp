#pragma once

#include <array>
#include <string>
#include <vector>

#include "wpcas/poly.hpp"

namespace wpcas {

// Skew-symmetric matrix given by its strictly upper triangular entries
// a(i,j), i < j, indices 0-based. The diagonal is zero and a(j,i) = -a(i,j).
class SkewPfaffianMatrix {
 public:
  // upper rows: row i lists a(i,i+1), ..., a(i,n-1); rows has n-1 entries.
  SkewPfaffianMatrix(RingPtr ring, std::vector<std::vector<Poly>> upper_rows);

  const RingPtr& ring() const { return ring_; }
  std::size_t size() const { return n_; }
  Poly at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, Poly value);

 private:
  RingPtr ring_;
  std::size_t n_;
  std::vector<std::vector<Poly>> upper_;
};

// a(i,j)a(k,l) - a(i,k)a(j,l) + a(i,l)a(j,k) for four distinct indices.
Poly pfaffian4(const SkewPfaffianMatrix& m, std::size_t i, std::size_t j, std::size_t k, std::size_t l);

struct PfaffianEntry {
  std::array<std::size_t, 4> rows;
  Poly value;
};

// All principal 4x4 Pfaffians, index sets in lexicographic order.
std::vector<PfaffianEntry> pfaffian_system(const SkewPfaffianMatrix& m);

// "ij.kl" label with 1-based indices, e.g. "23.45".
std::string pfaffian_label(const std::array<std::size_t, 4>& rows);

// true iff b = c*a for some nonzero rational c
bool proportional(const Poly& a, const Poly& b);

}  // namespace wpcas
