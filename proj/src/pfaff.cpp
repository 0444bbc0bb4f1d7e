#include "wpcas/pfaff.hpp"

#include <stdexcept>

namespace wpcas {

SkewPfaffianMatrix::SkewPfaffianMatrix(RingPtr ring, std::vector<std::vector<Poly>> upper_rows)
    : ring_(std::move(ring)), n_(upper_rows.size() + 1), upper_(std::move(upper_rows)) {
  if (n_ < 2) throw std::invalid_argument("skew matrix needs at least one upper row");
  for (std::size_t i = 0; i < upper_.size(); ++i) {
    if (upper_[i].size() != n_ - 1 - i)
      throw std::invalid_argument("skew matrix: upper row " + std::to_string(i + 1) + " should have " +
                                  std::to_string(n_ - 1 - i) + " entries");
    for (const auto& p : upper_[i]) require_same_ring(*p.ring(), *ring_);
  }
}

Poly SkewPfaffianMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) throw std::out_of_range("skew matrix index out of range");
  if (i == j) return Poly(ring_);
  if (i < j) return upper_[i][j - i - 1];
  return -upper_[j][i - j - 1];
}

void SkewPfaffianMatrix::set(std::size_t i, std::size_t j, Poly value) {
  if (i >= n_ || j >= n_ || i == j) throw std::out_of_range("skew matrix: bad entry index");
  require_same_ring(*value.ring(), *ring_);
  if (i < j)
    upper_[i][j - i - 1] = std::move(value);
  else
    upper_[j][i - j - 1] = -value;
}

Poly pfaffian4(const SkewPfaffianMatrix& m, std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
  const std::size_t n = m.size();
  if (i >= n || j >= n || k >= n || l >= n) throw std::out_of_range("pfaffian4: index out of range");
  if (i == j || i == k || i == l || j == k || j == l || k == l)
    throw std::invalid_argument("pfaffian4: indices must be distinct");
  return m.at(i, j) * m.at(k, l) - m.at(i, k) * m.at(j, l) + m.at(i, l) * m.at(j, k);
}

std::vector<PfaffianEntry> pfaffian_system(const SkewPfaffianMatrix& m) {
  const std::size_t n = m.size();
  if (n < 4) throw std::invalid_argument("pfaffian_system: matrix smaller than 4x4");
  std::vector<PfaffianEntry> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l) out.push_back({{i, j, k, l}, pfaffian4(m, i, j, k, l)});
  return out;
}

std::string pfaffian_label(const std::array<std::size_t, 4>& r) {
  return std::to_string(r[0] + 1) + std::to_string(r[1] + 1) + "." + std::to_string(r[2] + 1) +
         std::to_string(r[3] + 1);
}

bool proportional(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero() || a.size() != b.size()) return false;
  const Rational c = b.terms().front().coeff / a.terms().front().coeff;
  return a * c == b;
}

}  // namespace wpcas
