#include "doctest.h"
#include "oracles.hpp"
#include "wpcas/parse.hpp"
#include "wpcas/pfaff.hpp"

using namespace wpcas;

TEST_CASE("generic 4x4 Pfaffian") {
  RingPtr r;
  const SkewPfaffianMatrix m = oracle::generic_skew(4, r);
  CHECK(pfaffian4(m, 0, 1, 2, 3).to_string() == "a12*a34 - a13*a24 + a14*a23");
  CHECK(m.at(1, 0) == -m.at(0, 1));
  CHECK(m.at(2, 2).is_zero());
  CHECK_THROWS_AS(pfaffian4(m, 0, 1, 1, 3), std::invalid_argument);
  const auto sys = pfaffian_system(m);
  REQUIRE(sys.size() == 1);
  CHECK(sys[0].rows == std::array<std::size_t, 4>{0, 1, 2, 3});
}

TEST_CASE("5x5 system and labels") {
  RingPtr r;
  const SkewPfaffianMatrix m = oracle::generic_skew(5, r);
  const auto sys = pfaffian_system(m);
  REQUIRE(sys.size() == 5);
  std::vector<std::string> labels;
  for (const auto& e : sys) labels.push_back(pfaffian_label(e.rows));
  CHECK(labels == std::vector<std::string>{"12.34", "12.35", "12.45", "13.45", "23.45"});
  CHECK(sys[4].value.to_string() == "a23*a45 - a24*a35 + a25*a34");
}

TEST_CASE("set keeps skew symmetry") {
  RingPtr r;
  SkewPfaffianMatrix m = oracle::generic_skew(4, r);
  m.set(2, 0, parse_poly("a34", r));
  CHECK(m.at(0, 2) == parse_poly("-a34", r));
  CHECK_THROWS(m.set(1, 1, parse_poly("a12", r)));
}

TEST_CASE("constructor validates shape") {
  const RingPtr r = Ring::create({"x"}, {1});
  const Poly x = Poly::variable(r, 0);
  CHECK_NOTHROW(SkewPfaffianMatrix(r, {{x, x, x}, {x, x}, {x}}));
  CHECK_THROWS_AS(SkewPfaffianMatrix(r, {{x, x}, {x, x}}), std::invalid_argument);
}

TEST_CASE("proportional") {
  const RingPtr r = Ring::create({"x", "y"}, {1, 1});
  CHECK(proportional(parse_poly("x + 2*y", r), parse_poly("-3*x - 6*y", r)));
  CHECK_FALSE(proportional(parse_poly("x + 2*y", r), parse_poly("x - 2*y", r)));
  CHECK_FALSE(proportional(parse_poly("x", r), Poly(r)));
  CHECK_FALSE(proportional(Poly(r), Poly(r)));
}

TEST_CASE("property: alternating and Pf^2 = det") {
  const auto out = oracle::pfaffian_properties(3, 200);
  CHECK_MESSAGE(out.ok, out.detail);
}
