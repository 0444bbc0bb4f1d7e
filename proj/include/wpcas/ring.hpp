#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace wpcas {

using Rational = mpq_class;
using Integer = mpz_class;

// Upper bound on the number of ring variables. Every ring in scope has at
// most 8 variables plus one auxiliary variable for radical membership.
inline constexpr std::size_t kMaxVars = 16;

using Exponent = std::uint16_t;

class Monomial {
 public:
  Monomial() = default;

  // Throws std::invalid_argument on negative entries or too many variables,
  // std::overflow_error on exponents that do not fit.
  explicit Monomial(std::span<const int> exponents);

  static Monomial variable(std::size_t index, Exponent power = 1);

  Exponent operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, Exponent e) { exps_[i] = e; }

  bool is_one() const;
  int total() const;

  // true iff *this divides other
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  // Precondition: divisor.divides(*this).
  Monomial quotient(const Monomial& divisor) const;

  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);

  friend Monomial operator*(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial&, const Monomial&) = default;
  // Plain lexicographic comparison of the exponent arrays; used for
  // container keys only, not as a monomial order.
  friend std::strong_ordering operator<=>(const Monomial&, const Monomial&) = default;

  std::vector<int> exponents(std::size_t arity) const;

 private:
  std::array<Exponent, kMaxVars> exps_{};
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// Polynomial ring over the rationals with positively weighted variables.
class Ring {
 public:
  static RingPtr create(std::vector<std::string> names, std::vector<int> weights);

  std::size_t arity() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& weights() const { return weights_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  int weight(std::size_t i) const { return weights_.at(i); }

  std::optional<std::size_t> index_of(std::string_view name) const;
  std::size_t require_index(std::string_view name) const;

  int degree(const Monomial& m) const;

  // Canonical printing order: larger weighted degree first, then
  // lexicographic on the declared variable sequence.
  bool print_greater(const Monomial& a, const Monomial& b) const;

  // Same variable names and weights.
  bool same_as(const Ring& other) const;

  std::string describe() const;

 private:
  Ring(std::vector<std::string> names, std::vector<int> weights);

  std::vector<std::string> names_;
  std::vector<int> weights_;
};

void require_same_ring(const Ring& a, const Ring& b);

// All monomials of the given weighted degree, in decreasing printing order.
std::vector<Monomial> monomials_of_degree(const Ring& ring, int degree);

}  // namespace wpcas
