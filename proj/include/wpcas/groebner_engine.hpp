#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wpcas/order.hpp"

namespace wpcas {

// Term m*e_comp of a free module element.
struct ModTerm {
  Monomial mono;
  std::uint32_t comp = 0;
  Rational coeff;
};

// Free module element as a sparse term list sorted decreasingly in the
// engine's ModuleOrder. Ideals use rank 1 with comp == 0.
using ModVec = std::vector<ModTerm>;

// Buchberger's algorithm for submodules of a graded free module.
//
// Pairs are processed by (sugar, creation index); pairs are pruned with the
// Gebauer-Moeller form of the chain criterion and, for rank-1 orders, the
// coprime-leading-monomial criterion. For homogeneous input the sugar is the
// true degree, so complete(d) yields a basis that is correct in every degree
// up to d; every reduced S-polynomial is checked to stay homogeneous.
class GroebnerEngine {
 public:
  explicit GroebnerEngine(ModuleOrder order);

  const ModuleOrder& order() const { return order_; }

  // Sort terms into the engine's order and merge duplicates.
  ModVec normalize(ModVec v) const;

  // Reduce v against the current elements and add the nonzero remainder.
  // Returns false if v reduced to zero.
  bool add(ModVec v);

  // Take v as an element without reduction or new pairs. Only valid when the
  // adopted elements already form a Groebner basis.
  void adopt(ModVec v);

  // Process pending pairs with sugar <= max_degree (all if unset).
  void complete(std::optional<int> max_degree = std::nullopt);

  bool pending_pairs() const { return !pairs_.empty(); }

  // Full reduction (leading and tail terms) against the current elements.
  ModVec normal_form(ModVec v) const;

  // Reduced basis: minimal leading terms, monic, tail-reduced, sorted by
  // increasing leading term.
  std::vector<ModVec> reduced_basis() const;

  // true once a unit (constant in a rank-1 order) has entered the basis
  bool contains_unit() const { return unit_; }

  int term_degree(const ModTerm& t) const { return order_.shifted_degree(t.mono, t.comp); }

 private:
  struct Element {
    ModVec vec;
    int sugar = 0;
    bool redundant = false;
  };
  struct Pair {
    std::size_t i = 0;
    std::size_t j = 0;
    Monomial lcm;
    int sugar = 0;
    std::uint64_t serial = 0;
  };

  bool greater(const ModTerm& a, const ModTerm& b) const;
  int max_degree(const ModVec& v) const;
  bool is_homogeneous(const ModVec& v) const;
  void make_monic(ModVec& v) const;
  std::optional<std::size_t> find_reducer(const ModTerm& t) const;
  // a - c * m * b, with the leading terms assumed to cancel
  ModVec sub_scaled(const ModVec& a, std::size_t a_from, const Rational& c, const Monomial& m, const ModVec& b) const;
  ModVec spoly(const Pair& p) const;
  void insert(ModVec h, int sugar);

  ModuleOrder order_;
  std::vector<Element> elems_;
  std::vector<Pair> pairs_;
  std::uint64_t next_serial_ = 0;
  bool homogeneous_ = true;
  bool unit_ = false;
};

}  // namespace wpcas
