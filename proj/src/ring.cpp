#include "wpcas/ring.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

namespace wpcas {

namespace {

Exponent checked_exponent(long value) {
  if (value < 0) throw std::invalid_argument("negative exponent");
  if (value > std::numeric_limits<Exponent>::max()) throw std::overflow_error("exponent overflow");
  return static_cast<Exponent>(value);
}

}  // namespace

Monomial::Monomial(std::span<const int> exponents) {
  if (exponents.size() > kMaxVars) throw std::invalid_argument("too many variables in monomial");
  for (std::size_t i = 0; i < exponents.size(); ++i) exps_[i] = checked_exponent(exponents[i]);
}

Monomial Monomial::variable(std::size_t index, Exponent power) {
  if (index >= kMaxVars) throw std::invalid_argument("variable index out of range");
  Monomial m;
  m.exps_[index] = power;
  return m;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

int Monomial::total() const {
  int s = 0;
  for (auto e : exps_) s += e;
  return s;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial q;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (divisor.exps_[i] > exps_[i]) throw std::logic_error("monomial quotient: not divisible");
    q.exps_[i] = static_cast<Exponent>(exps_[i] - divisor.exps_[i]);
  }
  return q;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) m.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  return m;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) m.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    m.exps_[i] = checked_exponent(static_cast<long>(a.exps_[i]) + b.exps_[i]);
  return m;
}

std::vector<int> Monomial::exponents(std::size_t arity) const {
  return std::vector<int>(exps_.begin(), exps_.begin() + static_cast<long>(arity));
}

Ring::Ring(std::vector<std::string> names, std::vector<int> weights)
    : names_(std::move(names)), weights_(std::move(weights)) {}

RingPtr Ring::create(std::vector<std::string> names, std::vector<int> weights) {
  if (names.empty()) throw std::invalid_argument("ring needs at least one variable");
  if (names.size() != weights.size())
    throw std::invalid_argument("ring: number of weights does not match number of variables");
  if (names.size() > kMaxVars) throw std::invalid_argument("ring: too many variables");
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw std::invalid_argument("ring: empty variable name");
    if (!seen.insert(n).second) throw std::invalid_argument("ring: duplicate variable name '" + n + "'");
  }
  for (int w : weights)
    if (w < 1) throw std::invalid_argument("ring: weights must be positive");
  return RingPtr(new Ring(std::move(names), std::move(weights)));
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::size_t Ring::require_index(std::string_view name) const {
  auto idx = index_of(name);
  if (!idx) throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
  return *idx;
}

int Ring::degree(const Monomial& m) const {
  int d = 0;
  for (std::size_t i = 0; i < weights_.size(); ++i) d += weights_[i] * m[i];
  return d;
}

bool Ring::print_greater(const Monomial& a, const Monomial& b) const {
  const int da = degree(a), db = degree(b);
  if (da != db) return da > db;
  for (std::size_t i = 0; i < arity(); ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

bool Ring::same_as(const Ring& other) const {
  return this == &other || (names_ == other.names_ && weights_ == other.weights_);
}

std::string Ring::describe() const {
  std::ostringstream os;
  os << "Q[";
  for (std::size_t i = 0; i < arity(); ++i) os << (i ? "," : "") << names_[i];
  os << "] weights (";
  for (std::size_t i = 0; i < arity(); ++i) os << (i ? "," : "") << weights_[i];
  os << ")";
  return os.str();
}

void require_same_ring(const Ring& a, const Ring& b) {
  if (!a.same_as(b)) throw std::invalid_argument("ring mismatch: " + a.describe() + " vs " + b.describe());
}

namespace {

void enumerate(const Ring& ring, std::size_t var, int remaining, Monomial& cur, std::vector<Monomial>& out) {
  if (var == ring.arity()) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  const int w = ring.weight(var);
  for (int e = remaining / w; e >= 0; --e) {
    cur.set(var, static_cast<Exponent>(e));
    enumerate(ring, var + 1, remaining - e * w, cur, out);
  }
  cur.set(var, 0);
}

}  // namespace

std::vector<Monomial> monomials_of_degree(const Ring& ring, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  Monomial cur;
  enumerate(ring, 0, degree, cur, out);
  // Enumeration with descending exponents in declared order is already
  // lexicographically decreasing, which is the printing order within a degree.
  return out;
}

}  // namespace wpcas
