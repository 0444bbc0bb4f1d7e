#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wpcas/gbengine.hpp"
#include "wpcas/graded_matrix.hpp"

namespace wpcas {

// Chain of differentials d_1, d_2, ... with d_k : L_k -> L_{k-1}.
// modules[k] holds the generator degrees of L_k.
struct Resolution {
  std::vector<GradedMatrix> differentials;
  std::vector<std::vector<int>> modules;
  bool minimal = false;
  // true when the last syzygy module computed was zero
  bool complete = false;

  std::size_t length() const { return differentials.size(); }
};

// Generator degrees per homological position, each sorted ascending.
struct BettiTable {
  std::vector<std::vector<int>> degrees;

  static BettiTable of(const Resolution& res);
  // One line per position, e.g. "L1: 7 8 9 10 11 12".
  std::string to_string() const;
  // Compact form, e.g. "0,1^2 | 3^4,4^5 | 6^5,7^4 | 9^2,10".
  std::string shape() const;
};

struct ComplexDefect {
  std::size_t position = 0;  // d_{position} * d_{position+1} fails (1-based)
  std::size_t row = 0;
  std::size_t col = 0;
  std::string value;  // offending entry, or a description of a degree mismatch
};

struct ComplexCheck {
  bool ok = true;
  std::optional<ComplexDefect> defect;
};

ComplexCheck check_complex(const Resolution& res);
ComplexCheck check_complex(const std::vector<GradedMatrix>& differentials);

// Presentation of the module generated by module_gens (monomials in the
// variables outside `keep`, the first being 1) over the subring on `keep`.
// graph_relations generate the ideal of the graph in the big ring. Rows of
// the result are the module generators in input order, columns a minimal set
// of relations, all over the subring. Throws std::invalid_argument when the
// module generators do not generate the module over the subring.
GradedMatrix restriction_presentation(const std::vector<Poly>& graph_relations, const std::vector<Poly>& module_gens,
                                      const std::vector<std::string>& keep);

// Remove constant entries by row and column operations (scanning columns by
// increasing degree), then reduce the columns to minimal generators. The
// cokernel is unchanged up to isomorphism.
GradedMatrix minimize_presentation(const GradedMatrix& m);

// Minimal graded free resolution of coker(presentation) with at most
// max_length differentials.
Resolution free_resolution(const GradedMatrix& presentation, std::size_t max_length);

// N with M * N = C exactly. Throws std::invalid_argument naming the first
// column of C outside the column module of M.
GradedMatrix lift_columns(const GradedMatrix& m, const GradedMatrix& c);

// Column modules of a and b agree (same row degrees required).
bool same_column_module(const GradedMatrix& a, const GradedMatrix& b);

// Maximal rank over a few seeded integer specialisations of the variables.
std::size_t generic_rank(const GradedMatrix& m, unsigned seed = 1, int trials = 3);

}  // namespace wpcas
