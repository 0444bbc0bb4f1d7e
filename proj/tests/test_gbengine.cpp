#include "doctest.h"
#include "oracles.hpp"
#include "wpcas/gbengine.hpp"
#include "wpcas/graded_matrix.hpp"
#include "wpcas/parse.hpp"

using namespace wpcas;

namespace {

std::vector<Poly> polys(const RingPtr& r, std::initializer_list<const char*> texts) {
  std::vector<Poly> out;
  for (const char* t : texts) out.push_back(parse_poly(t, r));
  return out;
}

std::vector<int> degrees(const std::vector<Poly>& ps) {
  std::vector<int> d;
  for (const auto& p : ps) d.push_back(*p.weighted_degree().value);
  std::sort(d.begin(), d.end());
  return d;
}

RingPtr graph_ring() { return Ring::create({"u", "v", "x", "y", "z", "t"}, {2, 3, 4, 5, 6, 9}); }

std::vector<Poly> graph_relations(const RingPtr& r) {
  return polys(r, {"-x + u^2", "-y + u*v", "-z + v^2 + u^3", "-t + u^3*v + v^3"});
}

}  // namespace

TEST_CASE("groebner basis of a small ideal") {
  const RingPtr r = Ring::create({"x", "y"}, {1, 1});
  const Ideal i(r, polys(r, {"x^2 - y^2", "x*y"}));
  const auto g = groebner_basis(i, MonomialOrder::degrevlex(*r));
  CHECK(oracle::check_groebner(g, MonomialOrder::degrevlex(*r)).ok);
  CHECK(ideal_member(parse_poly("y^3", r), i));
  CHECK_FALSE(ideal_member(parse_poly("y^2", r), i));
  CHECK(ideal_member(Poly(r), i));
}

TEST_CASE("unit ideal") {
  const RingPtr r = Ring::create({"x", "y"}, {1, 2});
  const Ideal i(r, polys(r, {"x - 1", "x"}));
  const auto g = *i.groebner();
  REQUIRE(g.size() == 1);
  CHECK(g[0] == Poly::constant(r, 1));
  CHECK(ideal_member(parse_poly("y^5 + 3", r), i));
}

TEST_CASE("normal form against a known basis") {
  const RingPtr r = Ring::create({"x", "y"}, {1, 1});
  const auto ord = MonomialOrder::degrevlex(*r);
  const auto g = groebner_basis(Ideal(r, polys(r, {"x^2 - y"})), ord);
  const Poly nf = normal_form(parse_poly("x^3", r), g, ord);
  CHECK(nf == parse_poly("x*y", r));
}

TEST_CASE("elimination of the graph ideal") {
  const RingPtr g = graph_ring();
  const Ideal graph(g, graph_relations(g));
  std::vector<Poly> gb_free;
  for (const auto& p : *graph.groebner(MonomialOrder::elimination(*g, {0, 1})))
    if (!p.involves_any({0, 1})) gb_free.push_back(p);
  CHECK(degrees(gb_free) == std::vector<int>{18, 19, 20, 21, 22, 23});

  const Ideal elim = elimination_ideal(graph, {"u", "v"});
  CHECK(elim.ring()->names() == std::vector<std::string>{"x", "y", "z", "t"});
  // q23 = x*g19 - y*f18, so only five generators are minimal.
  CHECK(degrees(elim.generators()) == std::vector<int>{18, 19, 20, 21, 22});
  const RingPtr b = elim.ring();
  const auto gamma = polys(b, {"x^3*z + x*y*t - z^3 + t^2", "x^2*y*z - x*z*t + y^2*t", "x^5 - x^2*z^2 + 2*x*y^2*z - y^4",
                               "x^3*t - x*y*z^2 + y^3*z", "-x*t^2 + y^2*z^2", "-x^2*z*t + y*z^3 - y*t^2"});
  for (const auto& p : gamma) CHECK(ideal_member(p, elim));
  const Ideal gi(b, gamma);
  for (const auto& p : elim.generators()) CHECK(ideal_member(p, gi));
  CHECK(gamma[5] == parse_poly("x", b) * gamma[1] - parse_poly("y", b) * gamma[0]);
  CHECK_THROWS_AS(elimination_ideal(graph, {"w"}), std::invalid_argument);
}

TEST_CASE("elimination of the graph ideal agrees with linear algebra") {
  const RingPtr g = graph_ring();
  const auto out = oracle::elimination_vs_macaulay(Ideal(g, graph_relations(g)), {"u", "v"}, 23);
  INFO(out.detail);
  CHECK(out.ok);
}

TEST_CASE("radical membership") {
  const RingPtr r = Ring::create({"x", "y"}, {1, 1});
  const Ideal i(r, polys(r, {"x^3", "y^2*x"}));
  CHECK(radical_member(parse_poly("x", r), i));
  CHECK_FALSE(radical_member(parse_poly("y", r), i));
  // the auxiliary variable gets a fresh name when "aux" is taken
  const RingPtr s = Ring::create({"aux", "y"}, {1, 1});
  CHECK(radical_member(parse_poly("aux", s), Ideal(s, polys(s, {"aux^4"}))));
}

TEST_CASE("syzygies of an ideal") {
  const RingPtr r = Ring::create({"x", "y", "z"}, {1, 1, 1});
  const Ideal i(r, polys(r, {"x", "y", "z"}));
  const GradedMatrix s = syzygies(i);
  CHECK(s.rows() == 3);
  CHECK(s.cols() == 3);
  for (std::size_t j = 0; j < s.cols(); ++j) {
    Poly sum(r);
    for (std::size_t k = 0; k < 3; ++k) sum += i.generators()[k] * s.at(k, j);
    CHECK(sum.is_zero());
    CHECK(s.col_degrees()[j] == 2);
  }
}

TEST_CASE("module membership and minimal generators") {
  const RingPtr r = Ring::create({"x", "y"}, {1, 1});
  const FreeModule f{r, {0, 1}};
  const Poly x = parse_poly("x", r), y = parse_poly("y", r), zero(r);
  const Submodule m(f, {{x, Poly::constant(r, 1)}, {y * x, y}, {x * x, x}});
  CHECK(module_member({x * y * y, y * y}, m));
  CHECK_FALSE(module_member({y * y, y}, m));
  CHECK_FALSE(module_member({y, zero}, m));
  const auto mg = minimal_generators(m);
  CHECK(mg.size() == 1);
  CHECK_THROWS_AS(minimal_generators(Submodule(f, {{x + Poly::constant(r, 1), zero}})), std::invalid_argument);
  CHECK(minimal_generators(Ideal(r, {x, x * y, y * y, y})).size() == 2);
}

TEST_CASE("inhomogeneous ideals are handled") {
  const RingPtr r = Ring::create({"x", "y"}, {1, 1});
  const Ideal i(r, polys(r, {"x^2 - y", "x*y - 1"}));
  const auto g = groebner_basis(i, MonomialOrder::degrevlex(*r));
  CHECK(oracle::check_groebner(g, MonomialOrder::degrevlex(*r)).ok);
  CHECK(ideal_member(parse_poly("x^3 - 1", r), i));
}

TEST_CASE("property: Groebner idempotence and Buchberger criterion") {
  const auto out = oracle::groebner_properties(11, 40);
  INFO(out.detail);
  CHECK(out.ok);
}

TEST_CASE("property: elimination agrees with Macaulay matrices up to degree 20") {
  const auto out = oracle::elimination_suite(5, 12, 20);
  INFO(out.detail);
  CHECK(out.ok);
}
