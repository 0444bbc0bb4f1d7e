#include "wpcas/linalg.hpp"

#include <stdexcept>

namespace wpcas {

std::vector<std::size_t> row_reduce(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m.front().size();
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    const Rational inv = 1 / m[row][c];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      const Rational f = m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

std::size_t rank(RationalMatrix m) { return row_reduce(m).size(); }

void RowSpace::reduce(std::vector<Rational>& v) const {
  if (v.size() != dim_) throw std::invalid_argument("RowSpace: dimension mismatch");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::size_t p = pivots_[i];
    if (v[p] == 0) continue;
    const Rational f = v[p];
    for (std::size_t k = 0; k < dim_; ++k)
      if (rows_[i][k] != 0) v[k] -= f * rows_[i][k];
  }
}

bool RowSpace::insert(std::vector<Rational> v) {
  reduce(v);
  std::size_t p = 0;
  while (p < dim_ && v[p] == 0) ++p;
  if (p == dim_) return false;
  const Rational inv = 1 / v[p];
  for (auto& x : v) x *= inv;
  // Keep existing rows reduced against the new pivot.
  for (auto& r : rows_) {
    if (r[p] == 0) continue;
    const Rational f = r[p];
    for (std::size_t k = 0; k < dim_; ++k) r[k] -= f * v[k];
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

bool RowSpace::contains(std::vector<Rational> v) const {
  reduce(v);
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace wpcas
