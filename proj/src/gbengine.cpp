#include "wpcas/gbengine.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "wpcas/graded_matrix.hpp"

namespace wpcas {

Ideal::Ideal(RingPtr ring, std::vector<Poly> generators) : ring_(std::move(ring)) {
  for (auto& g : generators) {
    require_same_ring(*g.ring(), *ring_);
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

Ideal::Ideal(const Ideal& other) : ring_(other.ring_), gens_(other.gens_) {
  std::lock_guard lock(other.cache_mutex_);
  cache_ = other.cache_;
}

Ideal& Ideal::operator=(const Ideal& other) {
  if (this == &other) return *this;
  std::map<std::string, std::shared_ptr<const std::vector<Poly>>> cache;
  {
    std::lock_guard lock(other.cache_mutex_);
    cache = other.cache_;
  }
  ring_ = other.ring_;
  gens_ = other.gens_;
  std::lock_guard lock(cache_mutex_);
  cache_ = std::move(cache);
  return *this;
}

bool Ideal::is_homogeneous() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Poly& p) { return p.is_homogeneous(); });
}

std::shared_ptr<const std::vector<Poly>> Ideal::groebner(const MonomialOrder& order) const {
  const std::string key = order.key();
  {
    std::lock_guard lock(cache_mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  GroebnerEngine engine(ModuleOrder(order, {0}));
  for (const auto& g : gens_) engine.add(to_modvec(g));
  engine.complete();
  auto basis = std::make_shared<std::vector<Poly>>();
  for (const auto& v : engine.reduced_basis()) basis->push_back(poly_from_modvec(ring_, v));
  std::lock_guard lock(cache_mutex_);
  cache_[key] = basis;
  return basis;
}

std::shared_ptr<const std::vector<Poly>> Ideal::groebner() const {
  return groebner(MonomialOrder::degrevlex(*ring_));
}

ModuleOrder FreeModule::default_order() const { return ModuleOrder(MonomialOrder::degrevlex(*ring), degrees); }

Submodule::Submodule(FreeModule ambient, std::vector<ModuleVector> generators) : ambient_(std::move(ambient)) {
  if (!ambient_.ring) throw std::invalid_argument("submodule needs a ring");
  if (ambient_.degrees.empty()) throw std::invalid_argument("free module of rank 0");
  for (auto& v : generators) {
    if (v.size() != ambient_.rank()) throw std::invalid_argument("submodule generator has wrong length");
    for (const auto& p : v) require_same_ring(*p.ring(), *ambient_.ring);
    gens_.push_back(std::move(v));
  }
}

Submodule::Submodule(const Submodule& other) : ambient_(other.ambient_), gens_(other.gens_) {
  std::lock_guard lock(other.cache_mutex_);
  cache_ = other.cache_;
}

Submodule& Submodule::operator=(const Submodule& other) {
  if (this == &other) return *this;
  std::map<std::string, std::shared_ptr<const std::vector<ModuleVector>>> cache;
  {
    std::lock_guard lock(other.cache_mutex_);
    cache = other.cache_;
  }
  ambient_ = other.ambient_;
  gens_ = other.gens_;
  std::lock_guard lock(cache_mutex_);
  cache_ = std::move(cache);
  return *this;
}

std::optional<int> Submodule::degree_of(const ModuleVector& v) const {
  std::optional<int> deg;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    const auto wd = v[i].weighted_degree();
    if (!wd.homogeneous) throw std::invalid_argument("module vector entry is not homogeneous: " + v[i].to_string());
    const int d = *wd.value + ambient_.degrees[i];
    if (deg && *deg != d) throw std::invalid_argument("module vector is not homogeneous");
    deg = d;
  }
  return deg;
}

bool Submodule::is_graded() const {
  try {
    for (const auto& g : gens_) degree_of(g);
  } catch (const std::invalid_argument&) {
    return false;
  }
  return true;
}

std::shared_ptr<const std::vector<ModuleVector>> Submodule::groebner(const ModuleOrder& order) const {
  if (order.rank() != ambient_.rank()) throw std::invalid_argument("module order rank mismatch");
  const std::string key = order.key();
  {
    std::lock_guard lock(cache_mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  GroebnerEngine engine(order);
  for (const auto& g : gens_) engine.add(to_modvec(g));
  engine.complete();
  auto basis = std::make_shared<std::vector<ModuleVector>>();
  for (const auto& v : engine.reduced_basis()) basis->push_back(vector_from_modvec(ring(), ambient_.rank(), v));
  std::lock_guard lock(cache_mutex_);
  cache_[key] = basis;
  return basis;
}

std::shared_ptr<const std::vector<ModuleVector>> Submodule::groebner() const {
  return groebner(ambient_.default_order());
}

ModVec to_modvec(const Poly& p) {
  ModVec v;
  v.reserve(p.size());
  for (const auto& t : p.terms()) v.push_back({t.mono, 0, t.coeff});
  return v;
}

ModVec to_modvec(const ModuleVector& vec) {
  ModVec v;
  for (std::size_t i = 0; i < vec.size(); ++i)
    for (const auto& t : vec[i].terms()) v.push_back({t.mono, static_cast<std::uint32_t>(i), t.coeff});
  return v;
}

Poly poly_from_modvec(const RingPtr& ring, const ModVec& v) {
  std::vector<Term> terms;
  terms.reserve(v.size());
  for (const auto& t : v) {
    if (t.comp != 0) throw std::logic_error("poly_from_modvec: nonzero component");
    terms.push_back({t.mono, t.coeff});
  }
  return Poly::from_terms(ring, std::move(terms));
}

ModuleVector vector_from_modvec(const RingPtr& ring, std::size_t rank, const ModVec& v) {
  std::vector<std::vector<Term>> parts(rank);
  for (const auto& t : v) parts.at(t.comp).push_back({t.mono, t.coeff});
  ModuleVector out;
  for (auto& part : parts) out.push_back(Poly::from_terms(ring, std::move(part)));
  return out;
}

Monomial leading_monomial(const Poly& f, const MonomialOrder& order) {
  if (f.is_zero()) throw std::invalid_argument("leading_monomial of zero");
  const Monomial* best = &f.terms().front().mono;
  for (const auto& t : f.terms())
    if (order.compare(t.mono, *best) > 0) best = &t.mono;
  return *best;
}

std::vector<Poly> groebner_basis(const Ideal& ideal, const MonomialOrder& order) { return *ideal.groebner(order); }

std::vector<ModuleVector> groebner_basis(const Submodule& module, const ModuleOrder& order) {
  return *module.groebner(order);
}

Poly normal_form(const Poly& f, const std::vector<Poly>& basis, const MonomialOrder& order) {
  GroebnerEngine engine(ModuleOrder(order, {0}));
  for (const auto& b : basis) engine.adopt(to_modvec(b));
  return poly_from_modvec(f.ring(), engine.normal_form(engine.normalize(to_modvec(f))));
}

ModuleVector normal_form(const ModuleVector& f, const std::vector<ModuleVector>& basis, const ModuleOrder& order) {
  if (f.empty()) throw std::invalid_argument("normal_form: empty vector");
  GroebnerEngine engine(order);
  for (const auto& b : basis) engine.adopt(to_modvec(b));
  return vector_from_modvec(f.front().ring(), f.size(), engine.normal_form(engine.normalize(to_modvec(f))));
}

bool ideal_member(const Poly& f, const Ideal& ideal) {
  require_same_ring(*f.ring(), *ideal.ring());
  if (f.is_zero()) return true;
  const auto order = MonomialOrder::degrevlex(*ideal.ring());
  return normal_form(f, *ideal.groebner(order), order).is_zero();
}

bool module_member(const ModuleVector& v, const Submodule& module) {
  if (v.size() != module.ambient().rank()) throw std::invalid_argument("module_member: wrong vector length");
  const auto order = module.ambient().default_order();
  const auto nf = normal_form(v, *module.groebner(order), order);
  return std::all_of(nf.begin(), nf.end(), [](const Poly& p) { return p.is_zero(); });
}

Ideal elimination_ideal(const Ideal& ideal, const std::vector<std::string>& drop) {
  const Ring& ring = *ideal.ring();
  std::vector<std::size_t> drop_idx;
  for (const auto& name : drop) drop_idx.push_back(ring.require_index(name));
  std::vector<std::string> kept_names;
  std::vector<int> kept_weights;
  for (std::size_t v = 0; v < ring.arity(); ++v) {
    if (std::find(drop_idx.begin(), drop_idx.end(), v) != drop_idx.end()) continue;
    kept_names.push_back(ring.name(v));
    kept_weights.push_back(ring.weight(v));
  }
  if (kept_names.empty()) throw std::invalid_argument("elimination would drop every variable");
  RingPtr sub = Ring::create(kept_names, kept_weights);

  std::vector<Poly> kept;
  const auto basis = drop_idx.empty() ? ideal.groebner() : ideal.groebner(MonomialOrder::elimination(ring, drop_idx));
  for (const auto& g : *basis)
    if (!g.involves_any(drop_idx)) kept.push_back(g.map_into(sub));
  Ideal result(sub, kept);
  if (!result.is_homogeneous()) return result;
  return Ideal(sub, minimal_generators(result));
}

bool radical_member(const Poly& f, const Ideal& ideal) {
  require_same_ring(*f.ring(), *ideal.ring());
  if (f.is_zero()) return true;
  const Ring& ring = *ideal.ring();
  std::string aux = "aux";
  for (int k = 1; ring.index_of(aux); ++k) aux = "aux" + std::to_string(k);
  auto names = ring.names();
  auto weights = ring.weights();
  names.push_back(aux);
  weights.push_back(1);
  RingPtr ext = Ring::create(names, weights);

  GroebnerEngine engine(ModuleOrder(MonomialOrder::degrevlex(*ext), {0}));
  for (const auto& g : ideal.generators()) engine.add(to_modvec(g.map_into(ext)));
  engine.add(to_modvec(Poly::constant(ext, 1) - f.map_into(ext) * Poly::variable(ext, aux)));
  engine.complete();
  return engine.contains_unit();
}

GradedMatrix syzygies(const FreeModule& ambient, const std::vector<ModuleVector>& generators) {
  const Submodule module(ambient, generators);
  const std::size_t r = ambient.rank();
  const std::size_t k = generators.size();
  std::vector<int> gen_degrees;
  for (const auto& g : generators) gen_degrees.push_back(module.degree_of(g).value_or(0));

  std::vector<int> shifts = ambient.degrees;
  shifts.insert(shifts.end(), gen_degrees.begin(), gen_degrees.end());
  GroebnerEngine engine(ModuleOrder(MonomialOrder::degrevlex(*ambient.ring), shifts, r));
  // Each generator carries a tag e_{r+j}; the tail components record how
  // every basis element is combined from the original generators.
  for (std::size_t j = 0; j < k; ++j) {
    ModVec v = to_modvec(generators[j]);
    v.push_back({Monomial{}, static_cast<std::uint32_t>(r + j), 1});
    engine.add(std::move(v));
  }
  engine.complete();

  std::vector<ModuleVector> syz;
  std::vector<int> syz_degrees;
  for (const auto& v : engine.reduced_basis()) {
    if (v.front().comp < r) continue;
    ModVec tail;
    for (const auto& t : v) tail.push_back({t.mono, static_cast<std::uint32_t>(t.comp - r), t.coeff});
    syz_degrees.push_back(engine.term_degree(v.front()));
    syz.push_back(vector_from_modvec(ambient.ring, k, tail));
  }
  return GradedMatrix::from_columns(ambient.ring, gen_degrees, syz, syz_degrees);
}

GradedMatrix syzygies(const Ideal& ideal) {
  std::vector<ModuleVector> gens;
  for (const auto& g : ideal.generators()) gens.push_back({g});
  return syzygies(FreeModule{ideal.ring(), {0}}, gens);
}

std::vector<ModuleVector> minimal_generators(const Submodule& module) {
  std::vector<std::pair<int, std::size_t>> order;
  const auto& gens = module.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto d = module.degree_of(gens[i]);
    if (d) order.emplace_back(*d, i);
  }
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  GroebnerEngine engine(module.ambient().default_order());
  std::vector<ModuleVector> kept;
  for (const auto& [deg, idx] : order) {
    engine.complete(deg);
    const ModVec v = engine.normalize(to_modvec(gens[idx]));
    if (engine.normal_form(v).empty()) continue;
    kept.push_back(gens[idx]);
    engine.add(v);
  }
  return kept;
}

std::vector<Poly> minimal_generators(const Ideal& ideal) {
  if (!ideal.is_homogeneous()) throw std::invalid_argument("minimal_generators: ideal is not homogeneous");
  std::vector<ModuleVector> gens;
  for (const auto& g : ideal.generators()) gens.push_back({g});
  const auto kept = minimal_generators(Submodule(FreeModule{ideal.ring(), {0}}, gens));
  std::vector<Poly> out;
  for (const auto& v : kept) out.push_back(v.front());
  return out;
}

}  // namespace wpcas
