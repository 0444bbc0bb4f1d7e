#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "wpcas/groebner_engine.hpp"
#include "wpcas/order.hpp"
#include "wpcas/poly.hpp"

namespace wpcas {

class GradedMatrix;

// An element of a free module, one polynomial per position.
using ModuleVector = std::vector<Poly>;

class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Poly> generators);
  Ideal(const Ideal& other);
  Ideal& operator=(const Ideal& other);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Poly>& generators() const { return gens_; }
  bool is_homogeneous() const;

  // Reduced Groebner basis, memoised per order. Concurrent callers may race
  // to compute the same basis; the last completed result is kept.
  std::shared_ptr<const std::vector<Poly>> groebner(const MonomialOrder& order) const;
  std::shared_ptr<const std::vector<Poly>> groebner() const;

 private:
  RingPtr ring_;
  std::vector<Poly> gens_;
  mutable std::mutex cache_mutex_;
  mutable std::map<std::string, std::shared_ptr<const std::vector<Poly>>> cache_;
};

struct FreeModule {
  RingPtr ring;
  // Generator degrees: position i generates a summand A(-degrees[i]).
  std::vector<int> degrees;

  std::size_t rank() const { return degrees.size(); }
  ModuleOrder default_order() const;
};

class Submodule {
 public:
  Submodule(FreeModule ambient, std::vector<ModuleVector> generators);
  Submodule(const Submodule& other);
  Submodule& operator=(const Submodule& other);

  const FreeModule& ambient() const { return ambient_; }
  const RingPtr& ring() const { return ambient_.ring; }
  const std::vector<ModuleVector>& generators() const { return gens_; }

  // Degree of a vector against the ambient shifts; empty for zero vectors,
  // throws for vectors that are not homogeneous.
  std::optional<int> degree_of(const ModuleVector& v) const;
  bool is_graded() const;

  std::shared_ptr<const std::vector<ModuleVector>> groebner(const ModuleOrder& order) const;
  std::shared_ptr<const std::vector<ModuleVector>> groebner() const;

 private:
  FreeModule ambient_;
  std::vector<ModuleVector> gens_;
  mutable std::mutex cache_mutex_;
  mutable std::map<std::string, std::shared_ptr<const std::vector<ModuleVector>>> cache_;
};

// Conversions between the public types and engine term lists.
ModVec to_modvec(const Poly& p);
ModVec to_modvec(const ModuleVector& v);
Poly poly_from_modvec(const RingPtr& ring, const ModVec& v);
ModuleVector vector_from_modvec(const RingPtr& ring, std::size_t rank, const ModVec& v);

// Leading monomial under `order`; precondition: f nonzero.
Monomial leading_monomial(const Poly& f, const MonomialOrder& order);

std::vector<Poly> groebner_basis(const Ideal& ideal, const MonomialOrder& order);
std::vector<ModuleVector> groebner_basis(const Submodule& module, const ModuleOrder& order);

// Precondition: basis is a Groebner basis for order.
Poly normal_form(const Poly& f, const std::vector<Poly>& basis, const MonomialOrder& order);
ModuleVector normal_form(const ModuleVector& f, const std::vector<ModuleVector>& basis, const ModuleOrder& order);

bool ideal_member(const Poly& f, const Ideal& ideal);
bool module_member(const ModuleVector& v, const Submodule& module);

// I ∩ Q[kept variables], as an ideal of the subring on the kept variables
// (declared order preserved). Homogeneous input yields minimal generators.
Ideal elimination_ideal(const Ideal& ideal, const std::vector<std::string>& drop);

// f ∈ √I, via 1 ∈ I + (1 - f*aux) over the ring extended by one weight-1
// variable.
bool radical_member(const Poly& f, const Ideal& ideal);

// Syzygies of the given generators of a submodule of `ambient`. The result
// has one row per generator (row degrees = generator degrees) and one column
// per syzygy; generators * result = 0.
GradedMatrix syzygies(const FreeModule& ambient, const std::vector<ModuleVector>& generators);
GradedMatrix syzygies(const Ideal& ideal);

// Graded Nakayama: generators are scanned by increasing degree (input order
// within a degree) and kept iff not in the span of those already kept.
// Throws std::invalid_argument on inhomogeneous input.
std::vector<ModuleVector> minimal_generators(const Submodule& module);
std::vector<Poly> minimal_generators(const Ideal& ideal);

}  // namespace wpcas
