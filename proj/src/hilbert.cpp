#include "wpcas/hilbert.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace wpcas {

int default_hilbert_bound(const std::vector<int>& weights) {
  if (const char* env = std::getenv("WPCAS_HILBERT_BOUND")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 0 && v < 100000) return static_cast<int>(v);
  }
  return std::accumulate(weights.begin(), weights.end(), 0) + 5;
}

void tpoly_trim(TPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

TPoly tpoly_mul(const TPoly& a, const TPoly& b) {
  if (a.empty() || b.empty()) return {};
  TPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  tpoly_trim(out);
  return out;
}

namespace {

TPoly one_minus_t(int d) {
  TPoly p(static_cast<std::size_t>(d) + 1, 0);
  p[0] += 1;
  p[static_cast<std::size_t>(d)] -= 1;
  return p;
}

void sub_shifted(TPoly& a, const TPoly& b, int shift) {
  const std::size_t need = b.size() + static_cast<std::size_t>(shift);
  if (a.size() < need) a.resize(need, 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + static_cast<std::size_t>(shift)] -= b[i];
  tpoly_trim(a);
}

// Keep only the minimal elements under divisibility; deterministic order.
std::vector<Monomial> minimalise(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
      redundant = j != i && gens[j].divides(gens[i]);
    if (!redundant) out.push_back(gens[i]);
  }
  return out;
}

class NumeratorSolver {
 public:
  explicit NumeratorSolver(const Ring& ring) : ring_(ring) {}

  TPoly solve(const std::vector<Monomial>& gens) {
    if (gens.empty()) return {1};
    auto it = memo_.find(gens);
    if (it != memo_.end()) return it->second;

    TPoly result;
    bool coprime = true;
    for (std::size_t i = 0; i < gens.size() && coprime; ++i)
      for (std::size_t j = i + 1; j < gens.size() && coprime; ++j) coprime = gens[i].coprime(gens[j]);
    if (coprime) {
      result = {1};
      for (const auto& g : gens) result = tpoly_mul(result, one_minus_t(ring_.degree(g)));
    } else {
      // N(G) = N(G - m) - t^deg(m) N((G - m) : m)
      const Monomial m = gens.back();
      std::vector<Monomial> rest(gens.begin(), gens.end() - 1);
      std::vector<Monomial> colon;
      colon.reserve(rest.size());
      for (const auto& g : rest) colon.push_back(g.quotient(Monomial::gcd(g, m)));
      result = solve(rest);
      sub_shifted(result, solve(minimalise(std::move(colon))), ring_.degree(m));
    }
    memo_.emplace(gens, result);
    return result;
  }

 private:
  const Ring& ring_;
  std::map<std::vector<Monomial>, TPoly> memo_;
};

}  // namespace

TPoly monomial_hilbert_numerator(const Ring& ring, std::vector<Monomial> generators) {
  NumeratorSolver solver(ring);
  for (const auto& g : generators)
    if (g.is_one()) return {};
  return solver.solve(minimalise(std::move(generators)));
}

HilbertData hilbert_series(const Ideal& ideal, int bound) {
  if (bound < 0) throw std::invalid_argument("hilbert_series: negative bound");
  if (!ideal.is_homogeneous()) throw std::invalid_argument("hilbert_series: ideal is not homogeneous");
  const Ring& ring = *ideal.ring();
  const auto order = MonomialOrder::degrevlex(ring);
  std::vector<Monomial> leads;
  for (const auto& g : *ideal.groebner(order)) leads.push_back(leading_monomial(g, order));

  HilbertData h;
  h.bound = bound;
  h.weights = ring.weights();
  h.exact_numerator = monomial_hilbert_numerator(ring, leads);

  // series = numerator / prod(1 - t^w), by repeated division by (1 - t^w).
  std::vector<Integer> s(static_cast<std::size_t>(bound) + 1, 0);
  for (std::size_t i = 0; i < h.exact_numerator.size() && i < s.size(); ++i) s[i] = h.exact_numerator[i];
  for (int w : h.weights)
    for (std::size_t d = static_cast<std::size_t>(w); d < s.size(); ++d) s[d] += s[d - static_cast<std::size_t>(w)];
  h.series = std::move(s);
  return h;
}

TPoly numerator(const HilbertData& h) { return numerator(h, h.bound); }

TPoly numerator(const HilbertData& h, int max_degree) {
  if (max_degree > h.bound)
    throw std::invalid_argument("numerator: degree " + std::to_string(max_degree) + " exceeds series bound " +
                                std::to_string(h.bound));
  if (max_degree < 0) return {};
  TPoly p(h.series.begin(), h.series.begin() + max_degree + 1);
  for (int w : h.weights)
    for (std::size_t d = p.size(); d-- > static_cast<std::size_t>(w);) p[d] -= p[d - static_cast<std::size_t>(w)];
  tpoly_trim(p);
  return p;
}

std::string format_tpoly(const TPoly& p) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t d = 0; d < p.size(); ++d) {
    if (p[d] == 0) continue;
    Integer c = p[d];
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    c = abs(c);
    if (d == 0) {
      os << c;
    } else {
      if (c != 1) os << c;
      os << "t";
      if (d != 1) os << "^" << d;
    }
    first = false;
  }
  return first ? "0" : os.str();
}

bool palindromic(const TPoly& p, int n, int upto) {
  auto at = [&](int d) -> Integer { return d >= 0 && static_cast<std::size_t>(d) < p.size() ? p[d] : Integer(0); };
  for (int d = 0; d <= upto; ++d) {
    const int mirror = n - d;
    if (mirror < 0 || mirror > upto) continue;
    if (at(d) != at(mirror)) return false;
  }
  return true;
}

}  // namespace wpcas
