#include <cstdlib>

#include "doctest.h"
#include "oracles.hpp"
#include "wpcas/hilbert.hpp"
#include "wpcas/parse.hpp"

using namespace wpcas;

namespace {

TPoly tp(std::initializer_list<long> c) {
  TPoly p;
  for (long v : c) p.emplace_back(v);
  return p;
}

Ideal ideal_of(const RingPtr& r, std::initializer_list<const char*> gens) {
  std::vector<Poly> ps;
  for (const char* g : gens) ps.push_back(parse_poly(g, r));
  return Ideal(r, ps);
}

}  // namespace

TEST_CASE("monomial ideal numerators") {
  const RingPtr r = Ring::create({"x", "y"}, {1, 1});
  const auto x = Monomial::variable(0), y = Monomial::variable(1);
  CHECK(monomial_hilbert_numerator(*r, {}) == tp({1}));
  CHECK(monomial_hilbert_numerator(*r, {x}) == tp({1, -1}));
  CHECK(monomial_hilbert_numerator(*r, {x * x, x * y}) == tp({1, 0, -2, 1}));
  CHECK(monomial_hilbert_numerator(*r, {Monomial{}}) == TPoly{});
  const RingPtr w = Ring::create({"a", "b", "c"}, {1, 2, 3});
  // (a b, c^2): 1 - t^3 - t^6 + t^9
  CHECK(monomial_hilbert_numerator(*w, {Monomial::variable(0) * Monomial::variable(1), Monomial::variable(2, 2)}) ==
        tp({1, 0, 0, -1, 0, 0, -1, 0, 0, 1}));
}

TEST_CASE("series and truncated numerators") {
  const RingPtr r = Ring::create({"x", "y"}, {3, 2});
  const HilbertData h = hilbert_series(ideal_of(r, {"x^2 - y^3"}), 12);
  CHECK(h.bound == 12);
  CHECK(h.series.size() == 13);
  CHECK(h.series[6] == 1);  // y^3 only, x^2 identified with it
  CHECK(numerator(h) == tp({1, 0, 0, 0, 0, 0, -1}));
  CHECK(h.exact_numerator == tp({1, 0, 0, 0, 0, 0, -1}));
  CHECK(numerator(h, 5) == tp({1}));
  CHECK_THROWS_AS(numerator(h, 13), std::invalid_argument);
  CHECK_THROWS_AS(hilbert_series(ideal_of(r, {"x + y"}), 5), std::invalid_argument);
  CHECK_THROWS_AS(hilbert_series(ideal_of(r, {"x"}), -1), std::invalid_argument);
}

TEST_CASE("complete intersections are palindromic") {
  const RingPtr r = Ring::create({"x", "y", "z"}, {1, 2, 3});
  const Ideal ci = ideal_of(r, {"x^4 + y^2 + x*z", "z^2 + y^3 + x^6"});
  const HilbertData h = hilbert_series(ci, 25);
  const TPoly expected = tpoly_mul(tp({1, 0, 0, 0, -1}), tp({1, 0, 0, 0, 0, 0, -1}));
  CHECK(numerator(h) == expected);
  CHECK(palindromic(numerator(h), 10, 25));
  CHECK_FALSE(palindromic(tp({1, -1, 0, 1}), 3, 3));
}

TEST_CASE("formatting") {
  CHECK(format_tpoly({}) == "0");
  CHECK(format_tpoly(tp({1})) == "1");
  CHECK(format_tpoly(tp({1, -1})) == "1 - t");
  CHECK(format_tpoly(tp({0, 0, 3, 0, -2})) == "3t^2 - 2t^4");
  CHECK(format_tpoly(tp({-1, 0, 1})) == "-1 + t^2");
}

TEST_CASE("default bound and its override") {
  unsetenv("WPCAS_HILBERT_BOUND");
  CHECK(default_hilbert_bound({4, 5, 6, 9}) == 29);
  setenv("WPCAS_HILBERT_BOUND", "40", 1);
  CHECK(default_hilbert_bound({4, 5, 6, 9}) == 40);
  setenv("WPCAS_HILBERT_BOUND", "forty", 1);
  CHECK(default_hilbert_bound({4, 5, 6, 9}) == 29);
  setenv("WPCAS_HILBERT_BOUND", "-3", 1);
  CHECK(default_hilbert_bound({4, 5, 6, 9}) == 29);
  unsetenv("WPCAS_HILBERT_BOUND");
}

TEST_CASE("property: series agrees with Macaulay matrix ranks") {
  const auto out = oracle::hilbert_suite(11, 25, 14);
  CHECK_MESSAGE(out.ok, out.detail);
}
