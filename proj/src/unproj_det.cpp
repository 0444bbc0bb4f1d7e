#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "wpcas/hilbert.hpp"
#include "wpcas/parse.hpp"
#include "wpcas/resolve.hpp"
#include "wpcas/unproj.hpp"

namespace wpcas {

namespace {

int small_coefficient(std::mt19937& gen) { return static_cast<int>(gen() % 7) - 3; }

std::vector<std::vector<int>> random_symmetric(std::mt19937& gen) {
  std::vector<std::vector<int>> a(4, std::vector<int>(4, 0));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i; j < 4; ++j) a[i][j] = a[j][i] = small_coefficient(gen);
  return a;
}

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

std::vector<int> degrees_of(const std::vector<Poly>& ps) {
  std::vector<int> out;
  for (const auto& p : ps) out.push_back(p.weighted_degree().value.value_or(-1));
  std::sort(out.begin(), out.end());
  return out;
}

std::string seed_text(unsigned seed) { return std::to_string(seed); }

}  // namespace

DeterminantalData determinantal_data(unsigned seed) {
  DeterminantalData d;
  d.seed = seed;
  d.ring = Ring::create({"x1", "x2", "x3", "x4", "y1", "y2", "y3", "y4"}, {2, 2, 2, 2, 3, 3, 3, 3});
  std::mt19937 gen(seed);
  std::vector<std::vector<int>> a1(4, std::vector<int>(4, 0));
  a1[2][2] = small_coefficient(gen);
  a1[2][3] = a1[3][2] = small_coefficient(gen);
  a1[3][3] = small_coefficient(gen);
  d.coefficients.push_back(a1);
  for (int k = 1; k < 4; ++k) d.coefficients.push_back(random_symmetric(gen));

  d.m.assign(4, std::vector<Poly>(4, Poly(d.ring)));
  for (std::size_t k = 0; k < 4; ++k) {
    const Poly xk = Poly::variable(d.ring, k);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        if (d.coefficients[k][i][j] != 0) d.m[i][j] += xk * Rational(d.coefficients[k][i][j]);
  }
  d.adjugate = adjugate_symmetric(d.m);
  for (std::size_t i = 0; i < 4; ++i) {
    Poly row(d.ring);
    for (std::size_t j = 0; j < 4; ++j) row += d.m[i][j] * Poly::variable(d.ring, 4 + j);
    d.equations.push_back(row);
  }
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i; j < 4; ++j)
      d.equations.push_back(Poly::variable(d.ring, 4 + i) * Poly::variable(d.ring, 4 + j) - d.adjugate[i][j]);
  return d;
}

UnprojectionReport run_determinantal_example(unsigned seed) {
  UnprojectionReport report("symmetric determinantal quartic with 10 nodes, Type IV projection");
  report.set_meta("seed", seed_text(seed));
  const DeterminantalData d = determinantal_data(seed);

  auto degenerate = [&](const std::string& why) {
    report.info("det.seed_degenerate", "generic choices", "seed " + seed_text(seed) + " degenerate, retry: " + why);
    return report;
  };

  const auto& a1 = d.coefficients[0];
  if (a1[2][2] * a1[3][3] - a1[2][3] * a1[3][2] == 0) return degenerate("the block of A1 is singular");
  const Poly det = determinant(d.m);
  if (det.is_zero()) return degenerate("det M vanishes identically");

  // Rank <= 2 locus, over a copy of P^3 with unit weights.
  const RingPtr p3 = Ring::create({"x1", "x2", "x3", "x4"}, {1, 1, 1, 1});
  std::vector<Poly> to_p3;
  for (std::size_t k = 0; k < 4; ++k) to_p3.push_back(Poly::variable(p3, k));
  for (std::size_t k = 0; k < 4; ++k) to_p3.push_back(Poly(p3));
  std::vector<Poly> minors;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i; j < 4; ++j) {
      const Poly c = d.adjugate[i][j].substitute(to_p3, p3);
      if (!c.is_zero()) minors.push_back(c);
    }
  const int bound = default_hilbert_bound(p3->weights());
  const HilbertData hd = hilbert_series(Ideal(p3, minors), bound);
  std::vector<int> tail;
  for (int k = std::max(0, bound - 5); k <= bound; ++k) tail.push_back(static_cast<int>(hd.series[k].get_si()));
  const bool stable = std::all_of(tail.begin(), tail.end(), [&](int v) { return v == tail.front(); });
  const int nodes = stable ? tail.front() : -1;
  if (nodes != 10) return degenerate("rank 2 locus has Hilbert function " + join(tail));

  report.expect("det.equations", "the 14 equations", d.equations.size() == 14 &&
                    degrees_of(d.equations) == std::vector<int>{5, 5, 5, 5, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6},
                "equations M*y (degree 5) and y_i*y_j - adj(M)_ij (degree 6); degrees " + join(degrees_of(d.equations)));
  const Ideal iy(d.ring, d.equations);
  report.expect("det.det_in_ideal", "determinantal hypersurface", ideal_member(det, iy), "det M lies in I_Y");
  report.expect("det.nodes", "10 nodes", true,
                "rank 2 locus has Hilbert function " + join(tail) + " in degrees " + std::to_string(bound - 5) + ".." +
                    std::to_string(bound));

  const Ideal projected = elimination_ideal(iy, {"x1", "y1", "y2"});
  const auto gens = projected.generators();
  report.expect("det.elimination", "Type IV projection from the node", degrees_of(gens) == std::vector<int>{6, 6},
                "eliminating x1, y1, y2 leaves generators of degrees " + join(degrees_of(gens)));

  // Bottom-up side.
  const RingPtr curve = Ring::create({"u", "v"}, {1, 1});
  const RingPtr graph =
      Ring::create({"u", "v", "x1", "x2", "x3", "y1", "y2"}, {1, 1, 2, 2, 2, 3, 3});
  const RingPtr base = Ring::create({"x1", "x2", "x3", "y1", "y2"}, {2, 2, 2, 3, 3});
  std::vector<Poly> images;
  for (const char* t : {"u^2", "u*v", "v^2", "u^3", "v^3"}) images.push_back(parse_poly(t, curve));
  std::vector<Poly> qfgh;
  for (const char* t : {"x1*x3 - x2^2", "x1^3 - y1^2", "x1*x2*x3 - y1*y2", "x3^3 - y2^2"})
    qfgh.push_back(parse_poly(t, base));
  const bool vanish = std::all_of(qfgh.begin(), qfgh.end(),
                                  [&](const Poly& p) { return p.substitute(images, curve).is_zero(); });
  report.expect("det.curve_equations", "q, f, g, h", vanish, "q, f, g, h vanish on (u^2, uv, v^2, u^3, v^3)");

  std::mt19937 gen(seed + 1000003u);
  std::vector<Poly> x66;
  std::ostringstream coeffs;
  for (int k = 0; k < 2; ++k) {
    std::vector<int> c;
    for (int i = 0; i < 6; ++i) c.push_back(small_coefficient(gen));
    const Poly lin = Rational(c[0]) * Poly::variable(base, "x1") + Rational(c[1]) * Poly::variable(base, "x2") +
                     Rational(c[2]) * Poly::variable(base, "x3");
    x66.push_back(qfgh[0] * lin + Rational(c[3]) * qfgh[1] + Rational(c[4]) * qfgh[2] + Rational(c[5]) * qfgh[3]);
    coeffs << (k ? "; " : "") << join(c);
  }
  if (x66[0].is_zero() || x66[1].is_zero() || !quasismooth(x66, base))
    return degenerate("X66 with coefficients " + coeffs.str() + " is not quasismooth");
  report.expect("det.x66_quasismooth", "quasismooth X66", true,
                "X66 with coefficients " + coeffs.str() + " is a quasismooth complete intersection");

  std::vector<Poly> graph_rel;
  for (const char* t : {"x1 - u^2", "x2 - u*v", "x3 - v^2", "y1 - u^3", "y2 - v^3"})
    graph_rel.push_back(parse_poly(t, graph));
  std::vector<Poly> module_gens;
  for (const char* t : {"1", "u", "v"}) module_gens.push_back(parse_poly(t, graph));
  const GradedMatrix pres =
      restriction_presentation(graph_rel, module_gens, {"x1", "x2", "x3", "y1", "y2"}).map_into(base);
  const Resolution res = free_resolution(pres, 6);
  const BettiTable betti = BettiTable::of(res);
  const std::string shape = betti.shape();
  const std::size_t middle = res.length() >= 2 ? generic_rank(res.differentials[1], seed) : 0;
  report.expect("det.betti", "resolution of C[u,v]",
                shape == "0,1^2 | 3^4,4^5 | 6^5,7^4 | 9^2,10" && res.complete && res.minimal && check_complex(res).ok,
                "minimal resolution " + shape);
  report.expect("det.middle_rank", "resolution of C[u,v]", middle == 6,
                "middle 9x9 differential has generic rank " + std::to_string(middle));
  report.expect("det.l0", "resolution of C[u,v]",
                !betti.degrees.empty() && betti.degrees[0] == std::vector<int>{0, 1, 1}, "L0 = A + 2A(-1)");
  report.flag("det.l0_print", "resolution of C[u,v]",
              "the display gives L0 = A + 2A(-2); the generators u, v have degree 1, so L0 = A + 2A(-1)");
  return report;
}

UnprojectionReport run_determinantal_with_retry(unsigned seed, int attempts) {
  if (attempts < 1) throw std::invalid_argument("run_determinantal_with_retry: attempts must be positive");
  std::vector<Check> trail;
  for (int k = 0; k < attempts; ++k) {
    UnprojectionReport r = run_determinantal_example(seed + static_cast<unsigned>(k));
    const Check* bad = r.find("det.seed_degenerate");
    if (!bad) {
      if (trail.empty()) return r;
      UnprojectionReport out(r.title());
      for (const auto& [key, value] : r.meta()) out.set_meta(key, value);
      out.set_meta("requested_seed", seed_text(seed));
      for (const auto& c : trail) out.info(c.id, c.anchor, c.detail);
      out.append(r);
      return out;
    }
    trail.push_back(*bad);
  }
  UnprojectionReport out("symmetric determinantal quartic with 10 nodes, Type IV projection");
  out.set_meta("seed", seed_text(seed));
  for (const auto& c : trail) out.info(c.id, c.anchor, c.detail);
  out.expect("det.seed", "generic choices", false,
             "no usable seed in " + seed_text(seed) + ".." + seed_text(seed + static_cast<unsigned>(attempts) - 1));
  return out;
}

}  // namespace wpcas
