#include "wpcas/poly.hpp"

#include <algorithm>
#include <sstream>

namespace wpcas {

namespace {

// gmpxx does not canonicalize mpq_class(num, den); equality needs it.
Rational canonical(Rational c) {
  c.canonicalize();
  return c;
}

}  // namespace

Poly::Poly(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw std::invalid_argument("polynomial needs a ring");
}

Poly Poly::constant(RingPtr ring, const Rational& c) {
  Poly p(std::move(ring));
  const Rational k = canonical(c);
  if (k != 0) p.terms_.push_back({Monomial{}, k});
  return p;
}

Poly Poly::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->arity()) throw std::invalid_argument("variable index out of range");
  Poly p(std::move(ring));
  p.terms_.push_back({Monomial::variable(index), 1});
  return p;
}

Poly Poly::variable(RingPtr ring, std::string_view name) {
  const auto idx = ring->require_index(name);
  return variable(std::move(ring), idx);
}

Poly Poly::monomial(RingPtr ring, const Monomial& m, const Rational& c) {
  Poly p(std::move(ring));
  const Rational k = canonical(c);
  if (k != 0) p.terms_.push_back({m, k});
  return p;
}

Poly Poly::from_terms(RingPtr ring, std::vector<Term> terms) {
  Poly p(std::move(ring));
  const Ring& r = *p.ring_;
  for (auto& t : terms) t.coeff.canonicalize();
  std::sort(terms.begin(), terms.end(),
            [&r](const Term& a, const Term& b) { return r.print_greater(a.mono, b.mono); });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

Rational Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return 0;
}

Rational Poly::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.mono == m) return t.coeff;
  return 0;
}

WeightedDegree Poly::weighted_degree() const {
  WeightedDegree wd;
  for (const auto& t : terms_) {
    const int d = ring_->degree(t.mono);
    if (!wd.value) {
      wd.value = d;
    } else if (d != *wd.value) {
      wd.homogeneous = false;
      wd.value = std::max(*wd.value, d);
    }
  }
  return wd;
}

bool Poly::involves(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(), [var](const Term& t) { return t.mono[var] != 0; });
}

bool Poly::involves_any(const std::vector<std::size_t>& vars) const {
  return std::any_of(vars.begin(), vars.end(), [this](std::size_t v) { return involves(v); });
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

namespace {

// Merge b (scaled by sign) into a; both sorted in printing order.
std::vector<Term> merge_terms(const Ring& ring, const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && ring.print_greater(a[i].mono, b[j].mono))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || ring.print_greater(b[j].mono, a[i].mono)) {
      out.push_back(b[j++]);
      if (sign < 0) out.back().coeff = -out.back().coeff;
    } else {
      Rational c = sign < 0 ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
      if (c != 0) out.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Poly& Poly::operator+=(const Poly& o) {
  require_same_ring(*ring_, *o.ring_);
  terms_ = merge_terms(*ring_, terms_, o.terms_, 1);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  require_same_ring(*ring_, *o.ring_);
  terms_ = merge_terms(*ring_, terms_, o.terms_, -1);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_ring(*a.ring_, *b.ring_);
  std::map<Monomial, Rational> acc;
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) acc[s.mono * t.mono] += s.coeff * t.coeff;
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) terms.push_back({m, c});
  return Poly::from_terms(a.ring_, std::move(terms));
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

Poly Poly::pow(unsigned n) const {
  Poly result = constant(ring_, 1);
  Poly base = *this;
  while (n) {
    if (n & 1u) result *= base;
    n >>= 1u;
    if (n) base *= base;
  }
  return result;
}

Poly Poly::derivative(std::size_t var) const {
  if (var >= ring_->arity()) throw std::invalid_argument("derivative: variable out of range");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    const Exponent e = t.mono[var];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(var, static_cast<Exponent>(e - 1));
    out.push_back({m, t.coeff * e});
  }
  return from_terms(ring_, std::move(out));
}

Poly Poly::multiply_monomial(const Monomial& m, const Rational& c) const {
  Poly p(ring_);
  if (c == 0) return p;
  p.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves the printing order.
  for (const auto& t : terms_) p.terms_.push_back({t.mono * m, t.coeff * c});
  return p;
}

std::optional<Poly> Poly::divide_exact(const Poly& divisor) const {
  require_same_ring(*ring_, *divisor.ring_);
  if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
  Poly rem = *this;
  Poly quot(ring_);
  const Term& lead = divisor.terms_.front();
  while (!rem.is_zero()) {
    const Term& t = rem.terms_.front();
    if (!lead.mono.divides(t.mono)) return std::nullopt;
    const Monomial q = t.mono.quotient(lead.mono);
    const Rational c = t.coeff / lead.coeff;
    quot += monomial(ring_, q, c);
    rem -= divisor.multiply_monomial(q, c);
  }
  return quot;
}

Poly Poly::substitute(const std::vector<Poly>& images, const RingPtr& target) const {
  if (images.size() != ring_->arity()) throw std::invalid_argument("substitute: wrong number of images");
  for (const auto& img : images) require_same_ring(*img.ring(), *target);
  Poly result(target);
  std::vector<std::vector<Poly>> powers(images.size());
  auto power = [&](std::size_t v, Exponent e) -> const Poly& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[v]);
    return cache[e];
  };
  for (const auto& t : terms_) {
    Poly term = constant(target, t.coeff);
    for (std::size_t v = 0; v < ring_->arity(); ++v)
      if (t.mono[v]) term *= power(v, t.mono[v]);
    result += term;
  }
  return result;
}

Poly Poly::map_into(const RingPtr& target) const {
  std::vector<std::optional<std::size_t>> idx(ring_->arity());
  for (std::size_t v = 0; v < ring_->arity(); ++v) idx[v] = target->index_of(ring_->name(v));
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (std::size_t v = 0; v < ring_->arity(); ++v) {
      if (!t.mono[v]) continue;
      if (!idx[v]) throw std::invalid_argument("map_into: variable '" + ring_->name(v) + "' missing in target ring");
      m.set(*idx[v], t.mono[v]);
    }
    out.push_back({m, t.coeff});
  }
  return from_terms(target, std::move(out));
}

Rational Poly::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != ring_->arity()) throw std::invalid_argument("evaluate: wrong point dimension");
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i)
      for (Exponent e = 0; e < t.mono[i]; ++e) v *= point[i];
    sum += v;
  }
  return sum;
}

std::string format_rational(const Rational& q) {
  std::string s = q.get_num().get_str();
  if (q.get_den() != 1) s += "/" + q.get_den().get_str();
  return s;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    std::string mono;
    for (std::size_t v = 0; v < ring_->arity(); ++v) {
      if (!t.mono[v]) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_->name(v);
      if (t.mono[v] > 1) mono += "^" + std::to_string(t.mono[v]);
    }
    if (mono.empty()) {
      os << format_rational(c);
    } else if (c == 1) {
      os << mono;
    } else {
      os << format_rational(c) << "*" << mono;
    }
  }
  return os.str();
}

bool operator==(const Poly& a, const Poly& b) {
  if (!a.ring_->same_as(*b.ring_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

}  // namespace wpcas
