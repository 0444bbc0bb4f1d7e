// Independent checks shared by the property tests and the acceptance binary.
// Everything here is computed by direct linear algebra or brute force, never
// by the Groebner machinery under test except where that machinery is the
// subject of the check.
#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "wpcas/gbengine.hpp"
#include "wpcas/hilbert.hpp"
#include "wpcas/linalg.hpp"
#include "wpcas/order.hpp"
#include "wpcas/pfaff.hpp"
#include "wpcas/poly.hpp"
#include "wpcas/unproj.hpp"

namespace oracle {

using namespace wpcas;

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

inline Poly random_poly(const RingPtr& ring, std::mt19937& gen, int max_terms, int max_exp) {
  std::vector<Term> terms;
  const int n = static_cast<int>(gen() % static_cast<unsigned>(max_terms + 1));
  for (int k = 0; k < n; ++k) {
    std::vector<int> e(ring->arity());
    for (auto& x : e) x = static_cast<int>(gen() % static_cast<unsigned>(max_exp + 1));
    terms.push_back({Monomial(e), Rational(static_cast<int>(gen() % 11) - 5, 1 + static_cast<int>(gen() % 3))});
  }
  return Poly::from_terms(ring, terms);
}

// Random form of the given weighted degree (zero if no monomials exist).
inline Poly random_form(const RingPtr& ring, int degree, std::mt19937& gen, int max_terms = 3) {
  const auto monos = monomials_of_degree(*ring, degree);
  Poly p(ring);
  if (monos.empty()) return p;
  for (int k = 0; k < max_terms; ++k)
    p += Poly::monomial(ring, monos[gen() % monos.size()], Rational(static_cast<int>(gen() % 7) - 3));
  return p;
}

inline Outcome ring_axioms(int triples, unsigned seed) {
  Outcome out;
  const RingPtr r = Ring::create({"a", "b", "c"}, {1, 2, 3});
  std::mt19937 gen(seed);
  const Poly zero(r), one = Poly::constant(r, 1);
  for (int i = 0; i < triples && out.ok; ++i) {
    const Poly p = random_poly(r, gen, 4, 3), q = random_poly(r, gen, 4, 3), s = random_poly(r, gen, 4, 3);
    if (p + q != q + p) out.fail("addition is not commutative");
    if ((p + q) + s != p + (q + s)) out.fail("addition is not associative");
    if (p * q != q * p) out.fail("multiplication is not commutative");
    if ((p * q) * s != p * (q * s)) out.fail("multiplication is not associative");
    if (p * (q + s) != p * q + p * s) out.fail("multiplication does not distribute");
    if (p - p != zero || p + zero != p || p * one != p || !(p * zero).is_zero())
      out.fail("identity elements misbehave");
    if (-(-p) != p || p - q != p + (-q)) out.fail("negation misbehaves");
    const Poly pq = p * q;
    for (const auto& t : pq.terms())
      if (t.coeff == 0) out.fail("a zero coefficient is stored");
  }
  if (out.ok) out.detail = std::to_string(triples) + " random triples";
  return out;
}

inline Outcome order_axioms(unsigned seed, int samples = 2000) {
  Outcome out;
  const RingPtr r = Ring::create({"a", "b", "c", "d"}, {1, 2, 2, 3});
  std::vector<MonomialOrder> orders = {MonomialOrder::degrevlex(*r), MonomialOrder::elimination(*r, {0}),
                                       MonomialOrder::elimination(*r, {1, 3})};
  std::mt19937 gen(seed);
  auto rand_mono = [&] {
    std::vector<int> e(4);
    for (auto& x : e) x = static_cast<int>(gen() % 5);
    return Monomial(e);
  };
  for (const auto& ord : orders) {
    for (int k = 0; k < samples && out.ok; ++k) {
      const Monomial a = rand_mono(), b = rand_mono(), c = rand_mono();
      const auto ab = ord.compare(a, b), ba = ord.compare(b, a);
      if ((ab == 0) != (a == b)) out.fail("order is not antisymmetric on " + ord.key());
      if ((ab < 0) != (ba > 0)) out.fail("order is not antisymmetric on " + ord.key());
      if (ab < 0 && ord.compare(b, c) < 0 && ord.compare(a, c) >= 0) out.fail("order is not transitive");
      if (ab != ord.compare(a * c, b * c)) out.fail("order is not multiplicative on " + ord.key());
      if (!a.is_one() && ord.compare(Monomial{}, a) >= 0) out.fail("1 is not the smallest monomial");
      if (ord.has_block()) {
        bool a_blk = false, b_blk = false;
        for (std::size_t v = 0; v < 4; ++v) {
          a_blk = a_blk || (ord.in_block(v) && a[v] > 0);
          b_blk = b_blk || (ord.in_block(v) && b[v] > 0);
        }
        if (a_blk && !b_blk && ab <= 0) out.fail("block monomial is not above block-free monomials");
      }
    }
  }
  // Module order: multiplicative in the ring action, total on terms.
  const ModuleOrder mo(orders[0], {0, 3, 5});
  for (int k = 0; k < samples && out.ok; ++k) {
    const Monomial a = rand_mono(), b = rand_mono(), c = rand_mono();
    const auto ca = static_cast<std::uint32_t>(gen() % 3), cb = static_cast<std::uint32_t>(gen() % 3);
    const auto ab = mo.compare(a, ca, b, cb);
    if ((ab == 0) != (a == b && ca == cb)) out.fail("module order is not total");
    if (ab != mo.compare(a * c, ca, b * c, cb)) out.fail("module order is not multiplicative");
  }
  if (out.ok) out.detail = std::to_string(samples) + " samples per order";
  return out;
}

inline Poly s_polynomial(const Poly& f, const Poly& g, const MonomialOrder& ord) {
  const Monomial lf = leading_monomial(f, ord), lg = leading_monomial(g, ord);
  const Monomial l = Monomial::lcm(lf, lg);
  return f.multiply_monomial(l.quotient(lf), 1 / f.coefficient(lf)) -
         g.multiply_monomial(l.quotient(lg), 1 / g.coefficient(lg));
}

// Buchberger's criterion and reducedness for a returned basis.
inline Outcome check_groebner(const std::vector<Poly>& basis, const MonomialOrder& ord) {
  Outcome out;
  for (std::size_t i = 0; i < basis.size() && out.ok; ++i) {
    const Monomial li = leading_monomial(basis[i], ord);
    if (basis[i].coefficient(li) != 1) out.fail("basis element is not monic");
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      const Monomial lj = leading_monomial(basis[j], ord);
      for (const auto& t : basis[i].terms())
        if (lj.divides(t.mono)) out.fail("basis is not reduced");
      if (j > i && !normal_form(s_polynomial(basis[i], basis[j], ord), basis, ord).is_zero())
        out.fail("an S-polynomial does not reduce to zero");
    }
  }
  return out;
}

struct RandomIdeal {
  RingPtr ring;
  std::vector<Poly> gens;
};

inline RandomIdeal random_homogeneous_ideal(std::mt19937& gen, bool small) {
  static const std::vector<std::vector<int>> weight_sets = {{1, 1, 1}, {1, 2, 3}, {2, 3, 4, 5}, {1, 1, 2, 3}, {1, 2, 2}};
  const auto& w = weight_sets[gen() % weight_sets.size()];
  std::vector<std::string> names;
  for (std::size_t i = 0; i < w.size(); ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  RandomIdeal out{Ring::create(names, w), {}};
  const int count = 2 + static_cast<int>(gen() % 2);
  for (int k = 0; k < count; ++k) {
    const int deg = (small ? 2 : 3) + static_cast<int>(gen() % 4);
    const Poly p = random_form(out.ring, deg, gen);
    if (!p.is_zero()) out.gens.push_back(p);
  }
  if (out.gens.empty()) out.gens.push_back(Poly::variable(out.ring, 0) * Poly::variable(out.ring, 0));
  return out;
}

inline Outcome groebner_properties(unsigned seed, int instances) {
  Outcome out;
  std::mt19937 gen(seed);
  for (int k = 0; k < instances && out.ok; ++k) {
    const RandomIdeal ri = random_homogeneous_ideal(gen, true);
    const Ideal ideal(ri.ring, ri.gens);
    for (const auto& ord : {MonomialOrder::degrevlex(*ri.ring), MonomialOrder::elimination(*ri.ring, {0})}) {
      const auto g = groebner_basis(ideal, ord);
      const Outcome crit = check_groebner(g, ord);
      if (!crit.ok) out.fail("instance " + std::to_string(k) + ": " + crit.detail);
      if (groebner_basis(Ideal(ri.ring, g), ord) != g) out.fail("instance " + std::to_string(k) + ": not idempotent");
      for (const auto& p : ri.gens)
        if (!normal_form(p, g, ord).is_zero()) out.fail("a generator does not reduce to zero");
    }
  }
  if (out.ok) out.detail = std::to_string(instances) + " random ideals, two orders each";
  return out;
}

// ---- Macaulay matrices --------------------------------------------------

// Degree-d part of the ideal generated by homogeneous gens: the span of all
// products m*g with deg(m) + deg(g) = d, as row vectors on `columns`.
inline RowSpace macaulay_span(const RingPtr& ring, const std::vector<Poly>& gens, int d,
                              const std::vector<Monomial>& columns) {
  std::map<Monomial, std::size_t> index;
  for (std::size_t k = 0; k < columns.size(); ++k) index[columns[k]] = k;
  RowSpace span(columns.size());
  for (const auto& g : gens) {
    const int dg = *g.weighted_degree().value;
    if (dg > d) continue;
    for (const auto& m : monomials_of_degree(*ring, d - dg)) {
      std::vector<Rational> row(columns.size());
      const Poly product = g.multiply_monomial(m, 1);
      for (const auto& t : product.terms()) row[index.at(t.mono)] = t.coeff;
      span.insert(std::move(row));
    }
  }
  return span;
}

inline std::vector<Rational> coordinates(const Poly& p, const std::vector<Monomial>& columns) {
  std::vector<Rational> row(columns.size());
  for (std::size_t k = 0; k < columns.size(); ++k) row[k] = p.coefficient(columns[k]);
  return row;
}

// Compares elimination_ideal with the linear algebra answer
//   dim (I ∩ k[keep])_d = dim I_d + dim V_d - dim (I_d + V_d)
// where V_d is spanned by the block-free monomials, for d <= max_degree.
inline Outcome elimination_vs_macaulay(const Ideal& ideal, const std::vector<std::string>& drop, int max_degree) {
  Outcome out;
  const RingPtr& ring = ideal.ring();
  const Ideal elim = elimination_ideal(ideal, drop);
  std::vector<Poly> back;
  for (const auto& p : elim.generators()) back.push_back(p.map_into(ring));
  std::vector<std::size_t> dropped;
  for (const auto& n : drop) dropped.push_back(ring->require_index(n));
  for (int d = 1; d <= max_degree && out.ok; ++d) {
    const auto columns = monomials_of_degree(*ring, d);
    if (columns.empty()) continue;
    const RowSpace id = macaulay_span(ring, ideal.generators(), d, columns);
    RowSpace sum = id;
    std::size_t free_count = 0;
    for (std::size_t k = 0; k < columns.size(); ++k) {
      if (Poly::monomial(ring, columns[k]).involves_any(dropped)) continue;
      std::vector<Rational> e(columns.size());
      e[k] = 1;
      sum.insert(std::move(e));
      ++free_count;
    }
    const std::size_t expected = id.rank() + free_count - sum.rank();
    // span of the returned generators inside the subring
    const RowSpace got =
        macaulay_span(elim.ring(), elim.generators(), d, monomials_of_degree(*elim.ring(), d));
    if (got.rank() != expected)
      out.fail("degree " + std::to_string(d) + ": elimination ideal has dimension " + std::to_string(got.rank()) +
               ", linear algebra gives " + std::to_string(expected));
    for (const auto& p : back)
      if (p.weighted_degree().value == d && !id.contains(coordinates(p, columns)))
        out.fail("degree " + std::to_string(d) + ": a returned generator is not in the ideal");
  }
  return out;
}

inline Outcome elimination_suite(unsigned seed, int instances, int max_degree) {
  Outcome out;
  std::mt19937 gen(seed);
  for (int k = 0; k < instances && out.ok; ++k) {
    const RandomIdeal ri = random_homogeneous_ideal(gen, true);
    const std::vector<std::string> drop = {ri.ring->name(0)};
    const Outcome o = elimination_vs_macaulay(Ideal(ri.ring, ri.gens), drop, max_degree);
    if (!o.ok) out.fail("instance " + std::to_string(k) + " over " + ri.ring->describe() + ": " + o.detail);
  }
  if (out.ok)
    out.detail = std::to_string(instances) + " random ideals in at most 4 variables, degrees 1.." +
                 std::to_string(max_degree);
  return out;
}

// Hilbert function by Macaulay matrix rank.
inline Outcome hilbert_vs_macaulay(const Ideal& ideal, int bound) {
  Outcome out;
  const HilbertData h = hilbert_series(ideal, bound);
  for (int d = 0; d <= bound && out.ok; ++d) {
    const auto columns = monomials_of_degree(*ideal.ring(), d);
    const RowSpace id = macaulay_span(ideal.ring(), ideal.generators(), d, columns);
    const Integer expected = static_cast<unsigned long>(columns.size() - id.rank());
    if (h.series[d] != expected)
      out.fail("degree " + std::to_string(d) + ": series gives " + h.series[d].get_str() + ", rank count gives " +
               expected.get_str());
  }
  // The exact numerator must agree with the truncated series.
  const TPoly num = numerator(h);
  for (int d = 0; d <= bound && out.ok; ++d) {
    const Integer a = static_cast<std::size_t>(d) < num.size() ? num[d] : Integer(0);
    const Integer b = static_cast<std::size_t>(d) < h.exact_numerator.size() ? h.exact_numerator[d] : Integer(0);
    if (a != b) out.fail("exact numerator disagrees with the truncated series at degree " + std::to_string(d));
  }
  return out;
}

inline Outcome hilbert_suite(unsigned seed, int instances, int bound) {
  Outcome out;
  std::mt19937 gen(seed);
  for (int k = 0; k < instances && out.ok; ++k) {
    const RandomIdeal ri = random_homogeneous_ideal(gen, true);
    const Outcome o = hilbert_vs_macaulay(Ideal(ri.ring, ri.gens), bound);
    if (!o.ok) out.fail("instance " + std::to_string(k) + ": " + o.detail);
  }
  if (out.ok) out.detail = std::to_string(instances) + " random ideals, degrees 0.." + std::to_string(bound);
  return out;
}

// ---- Pfaffians ------------------------------------------------------------

inline int permutation_sign(std::array<std::size_t, 4> p) {
  int sign = 1;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (p[i] > p[j]) sign = -sign;
  return sign;
}

inline SkewPfaffianMatrix generic_skew(std::size_t n, RingPtr& ring) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) names.push_back("a" + std::to_string(i + 1) + std::to_string(j + 1));
  ring = Ring::create(names, std::vector<int>(names.size(), 1));
  std::vector<std::vector<Poly>> upper;
  std::size_t v = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    std::vector<Poly> row;
    for (std::size_t j = i + 1; j < n; ++j) row.push_back(Poly::variable(ring, v++));
    upper.push_back(row);
  }
  return SkewPfaffianMatrix(ring, upper);
}

// Alternating property of pfaffian4 on random 5x5 matrices, and
// Pf(A)^2 = det(A) for the generic 6x6 skew matrix, with the 6x6 Pfaffian
// expanded along the first row through pfaffian4.
inline Outcome pfaffian_properties(unsigned seed, int samples) {
  Outcome out;
  std::mt19937 gen(seed);
  const RingPtr r = Ring::create({"p", "q", "w"}, {1, 1, 1});
  for (int k = 0; k < samples && out.ok; ++k) {
    std::vector<std::vector<Poly>> upper;
    for (std::size_t i = 0; i < 4; ++i) {
      std::vector<Poly> row;
      for (std::size_t j = i + 1; j < 5; ++j) row.push_back(random_poly(r, gen, 2, 2));
      upper.push_back(row);
    }
    const SkewPfaffianMatrix m(r, upper);
    std::array<std::size_t, 4> idx = {0, 0, 0, 0};
    std::vector<std::size_t> pool = {0, 1, 2, 3, 4};
    std::shuffle(pool.begin(), pool.end(), gen);
    std::copy(pool.begin(), pool.begin() + 4, idx.begin());
    std::array<std::size_t, 4> sorted_idx = idx;
    std::sort(sorted_idx.begin(), sorted_idx.end());
    const Poly base = pfaffian4(m, sorted_idx[0], sorted_idx[1], sorted_idx[2], sorted_idx[3]);
    const Poly perm = pfaffian4(m, idx[0], idx[1], idx[2], idx[3]);
    std::array<std::size_t, 4> rank{};
    for (std::size_t a = 0; a < 4; ++a)
      rank[a] = static_cast<std::size_t>(std::find(sorted_idx.begin(), sorted_idx.end(), idx[a]) - sorted_idx.begin());
    const Poly expected = permutation_sign(rank) > 0 ? base : -base;
    if (perm != expected) out.fail("pfaffian4 is not alternating in its indices");
  }
  RingPtr ring;
  const SkewPfaffianMatrix a = generic_skew(6, ring);
  Poly pf(ring);
  for (std::size_t j = 1; j < 6; ++j) {
    std::vector<std::size_t> rest;
    for (std::size_t k = 1; k < 6; ++k)
      if (k != j) rest.push_back(k);
    const Poly term = a.at(0, j) * pfaffian4(a, rest[0], rest[1], rest[2], rest[3]);
    if (j % 2 == 1)
      pf += term;
    else
      pf -= term;
  }
  PolyMatrix full(6, std::vector<Poly>(6, Poly(ring)));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) full[i][j] = a.at(i, j);
  if (pf * pf != determinant(full)) out.fail("Pf^2 differs from det for the generic 6x6 skew matrix");
  if (out.ok) out.detail = std::to_string(samples) + " random index permutations; Pf^2 = det on generic 6x6 (15 terms)";
  return out;
}

}  // namespace oracle
