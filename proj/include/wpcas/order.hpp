#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "wpcas/ring.hpp"

namespace wpcas {

// Weighted degree reverse lexicographic order, optionally refined into a
// block order: monomials are first compared on the variables of the
// elimination block (weighted degree, then revlex), then on the remaining
// variables. Any monomial involving a block variable is therefore greater
// than every block-free monomial.
//
// Revlex tie-break on the declared variable sequence: among monomials of
// equal weighted degree, a > b iff the last nonzero entry of a - b is
// negative. Over Q[u,v] with weights (2,3) this gives u^3 > v^2.
class MonomialOrder {
 public:
  static MonomialOrder degrevlex(const Ring& ring);
  static MonomialOrder elimination(const Ring& ring, const std::vector<std::size_t>& block);

  std::size_t arity() const { return arity_; }
  bool has_block() const { return block_mask_ != 0; }
  bool in_block(std::size_t var) const { return (block_mask_ >> var) & 1u; }

  int degree(const Monomial& m) const;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const { return compare_shifted(a, 0, b, 0); }

  // Compare with integer shifts added to the degree of the non-block part.
  std::strong_ordering compare_shifted(const Monomial& a, int shift_a, const Monomial& b, int shift_b) const;

  // Stable textual key used to memoise Groebner bases per order.
  std::string key() const;

 private:
  std::size_t arity_ = 0;
  std::array<int, kMaxVars> weights_{};
  std::uint32_t block_mask_ = 0;
};

// Order on terms m*e_i of a graded free module. Components below top_rank
// (when nonzero) dominate all others; then the base order compares the
// monomials with the component degree shift added; ties go to the lower
// component index.
class ModuleOrder {
 public:
  ModuleOrder(MonomialOrder base, std::vector<int> shifts, std::size_t top_rank = 0);

  const MonomialOrder& base() const { return base_; }
  std::size_t rank() const { return shifts_.size(); }
  std::size_t top_rank() const { return top_rank_; }
  const std::vector<int>& shifts() const { return shifts_; }
  int shifted_degree(const Monomial& m, std::uint32_t comp) const { return base_.degree(m) + shifts_[comp]; }

  std::strong_ordering compare(const Monomial& a, std::uint32_t ca, const Monomial& b, std::uint32_t cb) const;

  std::string key() const;

 private:
  MonomialOrder base_;
  std::vector<int> shifts_;
  std::size_t top_rank_;
};

// Public comparison on explicit exponent vectors; throws on arity mismatch.
std::strong_ordering compare_monomials(std::span<const int> a, std::span<const int> b, const MonomialOrder& order);

}  // namespace wpcas
