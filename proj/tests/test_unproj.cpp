#include "doctest.h"
#include "wpcas/parse.hpp"
#include "wpcas/unproj.hpp"

using namespace wpcas;

namespace {

const UnprojectionReport& standard_report() {
  static const UnprojectionReport r = run_main_example();
  return r;
}

PolyMatrix matrix_of(const RingPtr& r, std::vector<std::vector<const char*>> rows) {
  PolyMatrix m;
  for (const auto& row : rows) {
    std::vector<Poly> ps;
    for (const char* s : row) ps.push_back(parse_poly(s, r));
    m.push_back(ps);
  }
  return m;
}

}  // namespace

TEST_CASE("main example passes with flags only for printed discrepancies") {
  const auto& r = standard_report();
  CHECK(r.passed());
  CHECK(r.count(CheckStatus::Fail) == 0);
  for (const auto& c : r.checks())
    if (c.status == CheckStatus::Flag) CHECK_MESSAGE(!c.detail.empty(), c.id);
  for (const char* id : {"elim.gb_degrees", "pres.module_equal", "res.betti", "res.duality", "km.lhs", "km.rhs",
                         "pf.first5", "pf.second5", "pf.third5", "pf.six_contains", "hilb.numerator", "hilb.c22"}) {
    const Check* c = r.find(id);
    REQUIRE_MESSAGE(c != nullptr, id);
    CHECK_MESSAGE(c->status == CheckStatus::Pass, id);
  }
}

TEST_CASE("report output is deterministic") {
  const UnprojectionReport again = run_main_example();
  CHECK(again.to_kv() == standard_report().to_kv());
  CHECK(again.to_text() == standard_report().to_text());
}

TEST_CASE("variants of the quartic stop at quasismoothness") {
  for (auto v : {MainVariant::MinusZf, MainVariant::NoZf}) {
    const UnprojectionReport r = run_main_example({v, ""});
    CHECK_FALSE(r.passed());
    const Check* qs = r.find("qs.f24");
    REQUIRE(qs != nullptr);
    CHECK(qs->status == CheckStatus::Fail);
    CHECK(r.find("pipeline.halted") != nullptr);
    CHECK(r.find("res.betti") == nullptr);
  }
}

TEST_CASE("injected sign fault is caught") {
  const UnprojectionReport r = run_main_example({MainVariant::Standard, "s2sign"});
  CHECK_FALSE(r.passed());
  const Check* c = r.find("pf.second5");
  REQUIRE(c != nullptr);
  CHECK(c->status == CheckStatus::Fail);
  CHECK_THROWS_AS(run_main_example({MainVariant::Standard, "nonsense"}), std::invalid_argument);
}

TEST_CASE("Kustin-Miller system rejects an inconsistent N") {
  UnprojectionData d = main_example_data();
  CHECK_NOTHROW(build_kustin_miller_system(d));
  const KustinMillerSystem km = build_kustin_miller_system(d);
  CHECK(km.relations.size() == 6);
  CHECK(km.lhs.rows() == 6);
  CHECK(km.lhs.cols() == 3);
  std::vector<std::vector<Poly>> e;
  for (std::size_t i = 0; i < d.n.rows(); ++i) {
    std::vector<Poly> row;
    for (std::size_t j = 0; j < d.n.cols(); ++j) row.push_back(d.n.at(i, j));
    e.push_back(row);
  }
  bool changed = false;
  for (auto& row : e)
    for (auto& p : row)
      if (!changed && !p.is_zero()) p = p * Rational(2), changed = true;
  REQUIRE(changed);
  d.n = GradedMatrix(d.n.ring(), d.n.row_degrees(), d.n.col_degrees(), e);
  CHECK_THROWS_AS(build_kustin_miller_system(d), std::invalid_argument);
}

TEST_CASE("determinant and adjugate") {
  const RingPtr r = Ring::create({"a", "b", "c", "d", "e", "f"}, {1, 1, 1, 1, 1, 1});
  const PolyMatrix id = matrix_of(r, {{"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "1"}});
  CHECK(determinant(id) == parse_poly("1", r));
  CHECK(adjugate_symmetric(id) == id);
  const PolyMatrix diag = matrix_of(r, {{"a", "0", "0"}, {"0", "b", "0"}, {"0", "0", "c"}});
  CHECK(adjugate_symmetric(diag) == matrix_of(r, {{"b*c", "0", "0"}, {"0", "a*c", "0"}, {"0", "0", "a*b"}}));
  const PolyMatrix sym = matrix_of(r, {{"a", "b", "c"}, {"b", "d", "e"}, {"c", "e", "f"}});
  const PolyMatrix adj = adjugate_symmetric(sym);
  const Poly det = determinant(sym);
  CHECK(det == parse_poly("a*d*f - a*e^2 - b^2*f + 2*b*c*e - c^2*d", r));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      Poly s(r);
      for (std::size_t k = 0; k < 3; ++k) s += sym[i][k] * adj[k][j];
      CHECK(s == (i == j ? det : Poly(r)));
    }
  CHECK_THROWS_AS(adjugate_symmetric(matrix_of(r, {{"a", "b"}, {"c", "d"}})), std::invalid_argument);
  CHECK_THROWS_AS(determinant(matrix_of(r, {{"a", "b"}})), std::invalid_argument);
}

TEST_CASE("quasismoothness") {
  const RingPtr r = Ring::create({"x", "y", "z"}, {1, 1, 1});
  CHECK(quasismooth({parse_poly("x^2 + y^2 + z^2", r)}, r));
  CHECK_FALSE(quasismooth({parse_poly("x^2 + y^2", r)}, r));
  CHECK_FALSE(quasismooth({parse_poly("x*y", r), parse_poly("x*z", r)}, r));
  CHECK_THROWS_AS(quasismooth({}, r), std::invalid_argument);
  CHECK_THROWS_AS(quasismooth({parse_poly("x^2 + y", r)}, r), std::invalid_argument);
  const RingPtr w = Ring::create({"x", "y"}, {1, 2});
  // x^2 = y passes through no singular point of P(1,2)
  CHECK(quasismooth({parse_poly("y - x^2", w)}, w));
}

TEST_CASE("spanning check") {
  const RingPtr target = Ring::create({"u", "v"}, {1, 1});
  const RingPtr source = Ring::create({"a"}, {2});
  const auto sd = spanning_check(source, {parse_poly("u^2", target)}, 2, 3);
  REQUIRE(sd.size() == 2);
  CHECK(sd[0].degree == 2);
  CHECK(sd[0].in_span == std::vector<bool>{true, false, false});
  CHECK(sd[1].in_span == std::vector<bool>{false, false, false, false});
  CHECK_THROWS_AS(spanning_check(source, {parse_poly("u", target)}, 2, 2), std::invalid_argument);
}

TEST_CASE("determinantal example") {
  const DeterminantalData d = determinantal_data(1);
  CHECK(d.equations.size() == 14);
  CHECK(d.m.size() == 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      CHECK(d.m[i][j] == d.m[j][i]);
      if (i < 2 || j < 2) CHECK(d.coefficients[0][i][j] == 0);
    }
  const UnprojectionReport r = run_determinantal_with_retry(1);
  CHECK(r.passed());
  REQUIRE(r.find("det.betti") != nullptr);
  CHECK(r.find("det.betti")->status == CheckStatus::Pass);
  CHECK(r.to_kv() == run_determinantal_with_retry(1).to_kv());
}

TEST_CASE("degenerate seeds are retried") {
  const UnprojectionReport r = run_determinantal_with_retry(0);
  CHECK(r.passed());
  CHECK(r.find("det.seed_degenerate") != nullptr);
  const UnprojectionReport once = run_determinantal_with_retry(0, 1);
  CHECK_FALSE(once.passed());
  CHECK(once.find("det.seed") != nullptr);
}
