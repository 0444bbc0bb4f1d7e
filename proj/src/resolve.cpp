#include "wpcas/resolve.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace wpcas {

BettiTable BettiTable::of(const Resolution& res) {
  BettiTable b;
  for (auto d : res.modules) {
    std::sort(d.begin(), d.end());
    b.degrees.push_back(std::move(d));
  }
  return b;
}

std::string BettiTable::to_string() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < degrees.size(); ++k) {
    os << "L" << k << ":";
    for (int d : degrees[k]) os << " " << d;
    os << "\n";
  }
  return os.str();
}

std::string BettiTable::shape() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < degrees.size(); ++k) {
    if (k) os << " | ";
    std::map<int, int> counts;
    for (int d : degrees[k]) ++counts[d];
    bool first = true;
    for (const auto& [d, n] : counts) {
      os << (first ? "" : ",") << d;
      if (n > 1) os << "^" << n;
      first = false;
    }
  }
  return os.str();
}

ComplexCheck check_complex(const std::vector<GradedMatrix>& differentials) {
  for (std::size_t k = 0; k + 1 < differentials.size(); ++k) {
    const GradedMatrix& a = differentials[k];
    const GradedMatrix& b = differentials[k + 1];
    if (a.cols() != b.rows() || a.col_degrees() != b.row_degrees())
      return {false, ComplexDefect{k + 1, 0, 0, "degree data of consecutive differentials do not match"}};
    const GradedMatrix p = a * b;
    for (std::size_t i = 0; i < p.rows(); ++i)
      for (std::size_t j = 0; j < p.cols(); ++j)
        if (!p.at(i, j).is_zero()) return {false, ComplexDefect{k + 1, i, j, p.at(i, j).to_string()}};
  }
  return {};
}

ComplexCheck check_complex(const Resolution& res) { return check_complex(res.differentials); }

GradedMatrix restriction_presentation(const std::vector<Poly>& graph_relations, const std::vector<Poly>& module_gens,
                                      const std::vector<std::string>& keep) {
  if (graph_relations.empty()) throw std::invalid_argument("restriction_presentation: no graph relations");
  if (module_gens.empty()) throw std::invalid_argument("restriction_presentation: no module generators");
  const RingPtr big = graph_relations.front().ring();
  for (const auto& g : graph_relations) require_same_ring(*g.ring(), *big);

  std::vector<std::size_t> keep_idx;
  for (const auto& name : keep) keep_idx.push_back(big->require_index(name));
  std::vector<std::size_t> dropped;
  std::vector<std::string> sub_names;
  std::vector<int> sub_weights;
  for (std::size_t v = 0; v < big->arity(); ++v) {
    if (std::find(keep_idx.begin(), keep_idx.end(), v) == keep_idx.end()) {
      dropped.push_back(v);
    } else {
      sub_names.push_back(big->name(v));
      sub_weights.push_back(big->weight(v));
    }
  }
  if (sub_names.empty()) throw std::invalid_argument("restriction_presentation: nothing to keep");
  const RingPtr sub = Ring::create(sub_names, sub_weights);

  const std::size_t k = module_gens.size();
  std::vector<int> degrees;
  for (std::size_t j = 0; j < k; ++j) {
    const Poly& m = module_gens[j];
    require_same_ring(*m.ring(), *big);
    if (m.size() != 1 || m.terms().front().coeff != 1 || m.involves_any(keep_idx))
      throw std::invalid_argument("restriction_presentation: module generator " + m.to_string() +
                                  " is not a monomial in the dropped variables");
    degrees.push_back(*m.weighted_degree().value);
  }
  if (!module_gens.front().is_constant())
    throw std::invalid_argument("restriction_presentation: the first module generator must be 1");

  const Poly zero(big);
  std::vector<ModuleVector> rels;
  for (std::size_t j = 1; j < k; ++j) {
    ModuleVector r(k, zero);
    r[0] = module_gens[j];
    r[j] = Poly::constant(big, -1);
    rels.push_back(std::move(r));
  }
  for (const auto& g : graph_relations) {
    if (!g.is_homogeneous()) throw std::invalid_argument("restriction_presentation: graph relation not homogeneous");
    ModuleVector r(k, zero);
    r[0] = g;
    rels.push_back(std::move(r));
  }

  const FreeModule ambient{big, degrees};
  const Submodule relations(ambient, rels);
  const ModuleOrder order(MonomialOrder::elimination(*big, dropped), degrees);
  const auto basis = relations.groebner(order);

  // The generators span the module over the subring iff every dropped
  // variable times every generator has a normal form free of dropped
  // variables (elimination order).
  for (std::size_t w : dropped)
    for (std::size_t j = 0; j < k; ++j) {
      ModuleVector e(k, zero);
      e[j] = Poly::variable(big, w) * module_gens[j];
      for (const auto& p : normal_form(e, *basis, order))
        if (p.involves_any(dropped))
          throw std::invalid_argument("restriction_presentation: generators do not span the module (" +
                                      big->name(w) + " * " + module_gens[j].to_string() + ")");
    }

  std::vector<ModuleVector> kept;
  for (const auto& v : *basis) {
    if (std::any_of(v.begin(), v.end(), [&](const Poly& p) { return p.involves_any(dropped); })) continue;
    ModuleVector mapped;
    for (const auto& p : v) mapped.push_back(p.map_into(sub));
    kept.push_back(std::move(mapped));
  }
  const FreeModule target{sub, degrees};
  const Submodule presented(target, kept);
  const auto minimal = minimal_generators(presented);
  std::vector<int> col_degrees;
  for (const auto& c : minimal) col_degrees.push_back(*presented.degree_of(c));
  return GradedMatrix::from_columns(sub, degrees, minimal, col_degrees);
}

namespace {

// Columns of m reduced to a minimal generating set, keeping degree data.
GradedMatrix minimal_columns(const GradedMatrix& m) {
  const FreeModule ambient{m.ring(), m.row_degrees()};
  const Submodule cols(ambient, m.columns());
  const auto minimal = minimal_generators(cols);
  std::vector<int> degs;
  for (const auto& c : minimal) degs.push_back(*cols.degree_of(c));
  return GradedMatrix::from_columns(m.ring(), m.row_degrees(), minimal, degs);
}

std::optional<std::pair<std::size_t, std::size_t>> unit_by_degree(const GradedMatrix& m) {
  std::vector<std::size_t> cols(m.cols());
  std::iota(cols.begin(), cols.end(), 0);
  std::stable_sort(cols.begin(), cols.end(),
                   [&](std::size_t a, std::size_t b) { return m.col_degrees()[a] < m.col_degrees()[b]; });
  for (auto j : cols)
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (!m.at(i, j).is_zero() && m.at(i, j).is_constant()) return std::make_pair(i, j);
  return std::nullopt;
}

}  // namespace

GradedMatrix minimize_presentation(const GradedMatrix& input) {
  GradedMatrix m = input;
  while (true) {
    if (m.rows() == 0) return GradedMatrix(m.ring(), {}, {});
    const auto unit = unit_by_degree(m);
    if (!unit) {
      GradedMatrix reduced = minimal_columns(m);
      if (!unit_by_degree(reduced)) return reduced;
      m = std::move(reduced);
      continue;
    }
    const auto [pi, pj] = *unit;
    const Rational c = m.at(pi, pj).constant_term();
    std::vector<int> rdeg, cdeg;
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (i != pi) rdeg.push_back(m.row_degrees()[i]);
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (j != pj) cdeg.push_back(m.col_degrees()[j]);
    std::vector<std::vector<Poly>> e;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == pi) continue;
      std::vector<Poly> row;
      const Poly factor = m.at(i, pj) * (1 / c);
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (j == pj) continue;
        row.push_back(factor.is_zero() ? m.at(i, j) : m.at(i, j) - factor * m.at(pi, j));
      }
      e.push_back(std::move(row));
    }
    m = GradedMatrix(m.ring(), std::move(rdeg), std::move(cdeg), std::move(e));
  }
}

Resolution free_resolution(const GradedMatrix& presentation, std::size_t max_length) {
  Resolution res;
  const GradedMatrix first = minimize_presentation(presentation);
  res.modules.push_back(first.row_degrees());
  if (first.cols() == 0) {
    res.complete = true;
    res.minimal = true;
    return res;
  }
  while (true) {
    const GradedMatrix& cur = res.differentials.empty() ? first : res.differentials.back();
    if (res.differentials.empty()) {
      if (max_length == 0) break;
      res.differentials.push_back(first);
      res.modules.push_back(first.col_degrees());
      continue;
    }
    const GradedMatrix syz = syzygies(FreeModule{cur.ring(), cur.row_degrees()}, cur.columns());
    const GradedMatrix next = syz.cols() == 0 ? syz : minimal_columns(syz);
    if (next.cols() == 0) {
      res.complete = true;
      break;
    }
    if (res.differentials.size() >= max_length) break;
    res.modules.push_back(next.col_degrees());
    res.differentials.push_back(next);
  }
  res.minimal = std::none_of(res.differentials.begin(), res.differentials.end(),
                             [](const GradedMatrix& d) { return d.find_unit_entry().has_value(); });
  return res;
}

GradedMatrix lift_columns(const GradedMatrix& m, const GradedMatrix& c) {
  require_same_ring(*m.ring(), *c.ring());
  if (m.row_degrees() != c.row_degrees()) throw std::invalid_argument("lift_columns: row degree data differ");
  const std::size_t r = m.rows();
  const std::size_t n = m.cols();
  std::vector<int> shifts = m.row_degrees();
  shifts.insert(shifts.end(), m.col_degrees().begin(), m.col_degrees().end());
  GroebnerEngine engine(ModuleOrder(MonomialOrder::degrevlex(*m.ring()), shifts, r));
  for (std::size_t j = 0; j < n; ++j) {
    ModVec v = to_modvec(m.column(j));
    v.push_back({Monomial{}, static_cast<std::uint32_t>(r + j), 1});
    engine.add(std::move(v));
  }
  engine.complete();

  std::vector<ModuleVector> cols;
  for (std::size_t j = 0; j < c.cols(); ++j) {
    const ModVec rem = engine.normal_form(engine.normalize(to_modvec(c.column(j))));
    ModVec lift;
    for (const auto& t : rem) {
      if (t.comp < r) throw std::invalid_argument("lift_columns: column " + std::to_string(j) +
                                                  " is not in the column module");
      lift.push_back({t.mono, static_cast<std::uint32_t>(t.comp - r), -t.coeff});
    }
    cols.push_back(vector_from_modvec(m.ring(), n, lift));
  }
  GradedMatrix result = GradedMatrix::from_columns(m.ring(), m.col_degrees(), cols, c.col_degrees());
  if (!(m * result == c)) throw std::logic_error("lift_columns: lift does not reproduce the target");
  return result;
}

bool same_column_module(const GradedMatrix& a, const GradedMatrix& b) {
  require_same_ring(*a.ring(), *b.ring());
  if (a.row_degrees() != b.row_degrees()) return false;
  const FreeModule ambient{a.ring(), a.row_degrees()};
  const Submodule ma(ambient, a.columns());
  const Submodule mb(ambient, b.columns());
  for (const auto& v : b.columns())
    if (!module_member(v, ma)) return false;
  for (const auto& v : a.columns())
    if (!module_member(v, mb)) return false;
  return true;
}

std::size_t generic_rank(const GradedMatrix& m, unsigned seed, int trials) {
  std::mt19937 gen(seed);
  std::size_t best = 0;
  for (int k = 0; k < trials; ++k) {
    std::vector<Rational> point;
    for (std::size_t v = 0; v < m.ring()->arity(); ++v) point.emplace_back(static_cast<int>(gen() % 101) - 50);
    best = std::max(best, rank(m.evaluate(point)));
  }
  return best;
}

}  // namespace wpcas
