#include "wpcas/groebner_engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace wpcas {

GroebnerEngine::GroebnerEngine(ModuleOrder order) : order_(std::move(order)) {}

bool GroebnerEngine::greater(const ModTerm& a, const ModTerm& b) const {
  return order_.compare(a.mono, a.comp, b.mono, b.comp) > 0;
}

ModVec GroebnerEngine::normalize(ModVec v) const {
  std::sort(v.begin(), v.end(), [this](const ModTerm& a, const ModTerm& b) { return greater(a, b); });
  ModVec out;
  out.reserve(v.size());
  for (auto& t : v) {
    if (t.comp >= order_.rank()) throw std::invalid_argument("module term component out of range");
    if (!out.empty() && out.back().mono == t.mono && out.back().comp == t.comp) {
      out.back().coeff += t.coeff;
      if (out.back().coeff == 0) out.pop_back();
    } else if (t.coeff != 0) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

int GroebnerEngine::max_degree(const ModVec& v) const {
  int d = 0;
  for (const auto& t : v) d = std::max(d, term_degree(t));
  return d;
}

bool GroebnerEngine::is_homogeneous(const ModVec& v) const {
  if (v.empty()) return true;
  const int d = term_degree(v.front());
  return std::all_of(v.begin(), v.end(), [&](const ModTerm& t) { return term_degree(t) == d; });
}

void GroebnerEngine::make_monic(ModVec& v) const {
  if (v.empty() || v.front().coeff == 1) return;
  const Rational inv = 1 / v.front().coeff;
  for (auto& t : v) t.coeff *= inv;
}

std::optional<std::size_t> GroebnerEngine::find_reducer(const ModTerm& t) const {
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    const auto& e = elems_[i];
    if (e.redundant) continue;
    const ModTerm& lt = e.vec.front();
    if (lt.comp == t.comp && lt.mono.divides(t.mono)) return i;
  }
  return std::nullopt;
}

ModVec GroebnerEngine::sub_scaled(const ModVec& a, std::size_t a_from, const Rational& c, const Monomial& m,
                                  const ModVec& b) const {
  ModVec out;
  out.reserve(a.size() - a_from + b.size());
  std::size_t i = a_from + 1, j = 1;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    ModTerm bt{b[j].mono * m, b[j].comp, 0};
    if (i == a.size()) {
      bt.coeff = -c * b[j].coeff;
      out.push_back(std::move(bt));
      ++j;
      continue;
    }
    const auto cmp = order_.compare(a[i].mono, a[i].comp, bt.mono, bt.comp);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      bt.coeff = -c * b[j].coeff;
      out.push_back(std::move(bt));
      ++j;
    } else {
      Rational s = a[i].coeff - c * b[j].coeff;
      if (s != 0) out.push_back({a[i].mono, a[i].comp, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

ModVec GroebnerEngine::normal_form(ModVec v) const {
  ModVec result;
  std::size_t head = 0;
  while (head < v.size()) {
    const ModTerm& lt = v[head];
    const auto r = find_reducer(lt);
    if (!r) {
      result.push_back(lt);
      ++head;
      continue;
    }
    const ModVec& g = elems_[*r].vec;
    const Monomial q = lt.mono.quotient(g.front().mono);
    const Rational c = lt.coeff / g.front().coeff;
    v = sub_scaled(v, head, c, q, g);
    head = 0;
  }
  return result;
}

bool GroebnerEngine::add(ModVec v) {
  v = normalize(std::move(v));
  if (v.empty()) return false;
  if (!is_homogeneous(v)) homogeneous_ = false;
  const int sugar = max_degree(v);
  v = normal_form(std::move(v));
  if (v.empty()) return false;
  make_monic(v);
  insert(std::move(v), sugar);
  return true;
}

void GroebnerEngine::adopt(ModVec v) {
  v = normalize(std::move(v));
  if (v.empty()) return;
  make_monic(v);
  const int sugar = max_degree(v);
  if (order_.rank() == 1 && v.front().mono.is_one()) unit_ = true;
  elems_.push_back({std::move(v), sugar, false});
}

void GroebnerEngine::insert(ModVec h, int sugar) {
  const std::size_t hi = elems_.size();
  const ModTerm& hl = h.front();
  const bool rank_one = order_.rank() == 1;

  if (rank_one && hl.mono.is_one()) {
    for (auto& e : elems_) e.redundant = true;
    pairs_.clear();
    elems_.push_back({std::move(h), sugar, false});
    unit_ = true;
    return;
  }

  struct Cand {
    std::size_t g;
    Monomial lcm;
    bool coprime;
    int sugar;
  };
  std::vector<Cand> cands;
  for (std::size_t g = 0; g < elems_.size(); ++g) {
    const auto& e = elems_[g];
    if (e.redundant || e.vec.front().comp != hl.comp) continue;
    const Monomial& gl = e.vec.front().mono;
    const Monomial l = Monomial::lcm(hl.mono, gl);
    const int s = std::max(sugar + order_.base().degree(l.quotient(hl.mono)),
                           e.sugar + order_.base().degree(l.quotient(gl)));
    cands.push_back({g, l, rank_one && hl.mono.coprime(gl), s});
  }

  // Chain criterion among the new pairs; coprime pairs are kept here only so
  // that they can cover other pairs, and dropped afterwards.
  std::vector<Cand> kept;
  for (std::size_t k = 0; k < cands.size(); ++k) {
    const Cand& p = cands[k];
    bool covered = false;
    if (!p.coprime) {
      for (std::size_t q = k + 1; q < cands.size() && !covered; ++q) covered = cands[q].lcm.divides(p.lcm);
      for (std::size_t q = 0; q < kept.size() && !covered; ++q) covered = kept[q].lcm.divides(p.lcm);
    }
    if (!covered) kept.push_back(p);
  }

  // Chain criterion on the existing pairs.
  std::vector<Pair> survivors;
  survivors.reserve(pairs_.size());
  for (auto& p : pairs_) {
    const std::uint32_t pc = elems_[p.i].vec.front().comp;
    if (pc == hl.comp && hl.mono.divides(p.lcm)) {
      const Monomial li = Monomial::lcm(elems_[p.i].vec.front().mono, hl.mono);
      const Monomial lj = Monomial::lcm(elems_[p.j].vec.front().mono, hl.mono);
      if (li != p.lcm && lj != p.lcm) continue;
    }
    survivors.push_back(std::move(p));
  }
  pairs_ = std::move(survivors);

  for (const auto& c : kept)
    if (!c.coprime) pairs_.push_back({c.g, hi, c.lcm, c.sugar, next_serial_++});

  for (auto& e : elems_)
    if (!e.redundant && e.vec.front().comp == hl.comp && hl.mono.divides(e.vec.front().mono)) e.redundant = true;

  elems_.push_back({std::move(h), sugar, false});
}

ModVec GroebnerEngine::spoly(const Pair& p) const {
  const ModVec& a = elems_[p.i].vec;
  const ModVec& b = elems_[p.j].vec;
  const Monomial ma = p.lcm.quotient(a.front().mono);
  const Monomial mb = p.lcm.quotient(b.front().mono);
  ModVec sa;
  sa.reserve(a.size());
  for (const auto& t : a) sa.push_back({t.mono * ma, t.comp, t.coeff});
  // Both leading coefficients are 1.
  return sub_scaled(sa, 0, 1, mb, b);
}

void GroebnerEngine::complete(std::optional<int> max_degree) {
  while (!unit_) {
    std::optional<std::size_t> best;
    for (std::size_t k = 0; k < pairs_.size(); ++k) {
      const Pair& p = pairs_[k];
      if (max_degree && p.sugar > *max_degree) continue;
      if (!best || p.sugar < pairs_[*best].sugar ||
          (p.sugar == pairs_[*best].sugar && p.serial < pairs_[*best].serial))
        best = k;
    }
    if (!best) return;
    const Pair p = pairs_[*best];
    pairs_.erase(pairs_.begin() + static_cast<long>(*best));
    ModVec s = normal_form(spoly(p));
    if (s.empty()) continue;
    if (homogeneous_ && (!is_homogeneous(s) || term_degree(s.front()) != p.sugar))
      throw std::logic_error("graded Buchberger produced an inhomogeneous S-polynomial remainder");
    make_monic(s);
    insert(std::move(s), p.sugar);
  }
}

std::vector<ModVec> GroebnerEngine::reduced_basis() const {
  std::vector<ModVec> out;
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    const auto& e = elems_[i];
    if (e.redundant) continue;
    ModVec tail(e.vec.begin() + 1, e.vec.end());
    // Tail terms are smaller than the leading term, so no element's own
    // leading term can reduce them; the full element set is safe to use.
    ModVec reduced = normal_form(std::move(tail));
    ModVec v;
    v.reserve(reduced.size() + 1);
    v.push_back(e.vec.front());
    for (auto& t : reduced) v.push_back(std::move(t));
    make_monic(v);
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end(), [this](const ModVec& a, const ModVec& b) { return greater(b.front(), a.front()); });
  return out;
}

}  // namespace wpcas
