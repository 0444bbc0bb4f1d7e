#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wpcas/ring.hpp"

namespace wpcas {

struct Term {
  Monomial mono;
  Rational coeff;
};

// Result of weighted_degree(): value is empty for the zero polynomial; for an
// inhomogeneous polynomial it is the largest term degree.
struct WeightedDegree {
  std::optional<int> value;
  bool homogeneous = true;
};

// Sparse polynomial with exact rational coefficients. Terms are kept in
// decreasing printing order (see Ring::print_greater) with no zero
// coefficients, so structural equality is polynomial equality.
class Poly {
 public:
  explicit Poly(RingPtr ring);

  static Poly constant(RingPtr ring, const Rational& c);
  static Poly variable(RingPtr ring, std::size_t index);
  static Poly variable(RingPtr ring, std::string_view name);
  static Poly monomial(RingPtr ring, const Monomial& m, const Rational& c = 1);
  static Poly from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Coefficient of the monomial 1.
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;

  WeightedDegree weighted_degree() const;
  bool is_homogeneous() const { return weighted_degree().homogeneous; }

  bool involves(std::size_t var) const;
  bool involves_any(const std::vector<std::size_t>& vars) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }

  Poly pow(unsigned n) const;
  Poly derivative(std::size_t var) const;
  Poly multiply_monomial(const Monomial& m, const Rational& c) const;

  // Exact division by a nonzero polynomial; std::nullopt when not divisible.
  std::optional<Poly> divide_exact(const Poly& divisor) const;

  // Ring homomorphism: variable i of this ring maps to images[i].
  Poly substitute(const std::vector<Poly>& images, const RingPtr& target) const;

  // Move into another ring, identifying variables by name. Throws if a
  // variable that occurs in this polynomial is absent from the target.
  Poly map_into(const RingPtr& target) const;

  Rational evaluate(const std::vector<Rational>& point) const;

  std::string to_string() const;

  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

std::string format_rational(const Rational& q);

}  // namespace wpcas
