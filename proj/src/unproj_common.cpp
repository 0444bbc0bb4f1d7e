#include <map>
#include <stdexcept>

#include "wpcas/linalg.hpp"
#include "wpcas/unproj.hpp"

namespace wpcas {

bool quasismooth(const std::vector<Poly>& equations, const RingPtr& ring) {
  if (equations.empty() || equations.size() > 2)
    throw std::invalid_argument("quasismooth: only hypersurfaces and codimension 2 complete intersections");
  for (const auto& e : equations) {
    require_same_ring(*e.ring(), *ring);
    if (!e.is_homogeneous()) throw std::invalid_argument("quasismooth: equation is not homogeneous");
  }
  const std::size_t n = ring->arity();
  std::vector<Poly> gens = equations;
  if (equations.size() == 1) {
    for (std::size_t v = 0; v < n; ++v) gens.push_back(equations[0].derivative(v));
  } else {
    std::vector<Poly> d0, d1;
    for (std::size_t v = 0; v < n; ++v) {
      d0.push_back(equations[0].derivative(v));
      d1.push_back(equations[1].derivative(v));
    }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) gens.push_back(d0[a] * d1[b] - d0[b] * d1[a]);
  }
  const Ideal singular(ring, gens);
  for (std::size_t v = 0; v < n; ++v)
    if (!radical_member(Poly::variable(ring, v), singular)) return false;
  return true;
}

std::vector<SpanDegree> spanning_check(const RingPtr& source, const std::vector<Poly>& images, int lo, int hi) {
  if (images.size() != source->arity()) throw std::invalid_argument("spanning_check: one image per variable");
  const RingPtr target = images.front().ring();
  for (std::size_t i = 0; i < images.size(); ++i) {
    require_same_ring(*images[i].ring(), *target);
    const auto wd = images[i].weighted_degree();
    if (!wd.homogeneous || wd.value != source->weight(i))
      throw std::invalid_argument("spanning_check: image of " + source->name(i) + " has the wrong degree");
  }
  std::vector<SpanDegree> out;
  for (int d = lo; d <= hi; ++d) {
    SpanDegree sd;
    sd.degree = d;
    sd.monomials = monomials_of_degree(*target, d);
    std::map<Monomial, std::size_t> index;
    for (std::size_t k = 0; k < sd.monomials.size(); ++k) index[sd.monomials[k]] = k;
    RowSpace span(sd.monomials.size());
    for (const auto& m : monomials_of_degree(*source, d)) {
      const Poly img = Poly::monomial(source, m).substitute(images, target);
      std::vector<Rational> row(sd.monomials.size());
      for (const auto& t : img.terms()) row[index.at(t.mono)] = t.coeff;
      span.insert(std::move(row));
    }
    for (std::size_t k = 0; k < sd.monomials.size(); ++k) {
      std::vector<Rational> unit(sd.monomials.size());
      unit[k] = 1;
      sd.in_span.push_back(span.contains(std::move(unit)));
    }
    out.push_back(std::move(sd));
  }
  return out;
}

namespace {

PolyMatrix minor_matrix(const PolyMatrix& m, std::size_t skip_row, std::size_t skip_col) {
  PolyMatrix out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i == skip_row) continue;
    std::vector<Poly> row;
    for (std::size_t j = 0; j < m.size(); ++j)
      if (j != skip_col) row.push_back(m[i][j]);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

Poly determinant(const PolyMatrix& m) {
  if (m.empty()) throw std::invalid_argument("determinant of an empty matrix");
  for (const auto& row : m)
    if (row.size() != m.size()) throw std::invalid_argument("determinant: matrix is not square");
  if (m.size() == 1) return m[0][0];
  Poly det(m[0][0].ring());
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (m[0][j].is_zero()) continue;
    const Poly term = m[0][j] * determinant(minor_matrix(m, 0, j));
    if (j % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

PolyMatrix adjugate_symmetric(const PolyMatrix& m) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw std::invalid_argument("adjugate: matrix is not square");
    for (std::size_t j = 0; j < i; ++j)
      if (m[i][j] != m[j][i]) throw std::invalid_argument("adjugate_symmetric: matrix is not symmetric");
  }
  const RingPtr ring = m[0][0].ring();
  if (n == 1) return {{Poly::constant(ring, 1)}};
  PolyMatrix adj(n, std::vector<Poly>(n, Poly(ring)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Poly c = determinant(minor_matrix(m, j, i));
      if ((i + j) % 2) c = -c;
      adj[i][j] = c;
      adj[j][i] = c;
    }
  return adj;
}

bool contains_up_to_sign(const std::vector<Poly>& list, const Poly& p) {
  for (const auto& q : list)
    if (q == p || q == -p) return true;
  return false;
}

}  // namespace wpcas
