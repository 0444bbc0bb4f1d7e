#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wpcas/gbengine.hpp"
#include "wpcas/graded_matrix.hpp"
#include "wpcas/pfaff.hpp"
#include "wpcas/report.hpp"

namespace wpcas {

using PolyMatrix = std::vector<std::vector<Poly>>;

// ---- general tools ------------------------------------------------------

// Smoothness of the affine cone off the origin, for one equation or a
// complete intersection of two: every variable must lie in the radical of
// the equations together with the maximal minors of their Jacobian.
// Throws std::invalid_argument for other counts or inhomogeneous input.
bool quasismooth(const std::vector<Poly>& equations, const RingPtr& ring);

struct SpanDegree {
  int degree = 0;
  std::vector<Monomial> monomials;  // monomials of the target ring, print order
  std::vector<bool> in_span;
};

// For each degree d in [lo, hi]: which degree-d monomials of the target ring
// lie in the span of the images of the degree-d monomials of the source ring.
// images[i] is the image of source variable i, homogeneous of its weight.
std::vector<SpanDegree> spanning_check(const RingPtr& source, const std::vector<Poly>& images, int lo, int hi);

Poly determinant(const PolyMatrix& m);
// Classical adjugate; throws std::invalid_argument if m is not symmetric.
PolyMatrix adjugate_symmetric(const PolyMatrix& m);

bool contains_up_to_sign(const std::vector<Poly>& list, const Poly& p);

// ---- the curve in P(4,5,6,9) -------------------------------------------

struct UnprojectionData {
  RingPtr curve;  // u, v
  RingPtr graph;  // u, v, x, y, z, t
  RingPtr base;   // x, y, z, t
  RingPtr ext;    // x, y, s0, z, s1, s2, t

  std::vector<Poly> graph_relations;  // in `graph`
  std::vector<Poly> images;           // x, y, z, t as forms in u, v
  std::vector<Poly> gamma;            // f18, g19, h20, q21, q22, q23 in `base`
  Poly f, g, h;
  // F24 = fcoeff[0] * f + fcoeff[1] * g + fcoeff[2] * h
  std::vector<Poly> fcoeff;
  Poly f24;

  // Rows indexed by the module generators (v, u, 1), degrees (3, 2, 0).
  GradedMatrix m;
  GradedMatrix j;   // 6x6 block matrix (0 I; -I 0)
  GradedMatrix n;   // m * n = (0; 0; f g h)
  std::vector<std::vector<int>> weight_table;  // displayed entry weights of m
  std::vector<Poly> n_column;                  // displayed N * fcoeff
  PolyMatrix kustin_miller_lhs;                // displayed 6x3 coefficient matrix
  std::vector<Poly> kustin_miller_rhs;         // displayed column

  std::vector<Poly> s;  // s0, s1, s2 in `ext`
  std::vector<Poly> relations_quadratic;  // S0, S1, S2 in `ext`
  // Displayed solved products f*s0, g*s0, h*s0 (right-hand sides).
  std::vector<Poly> solved_products;

  SkewPfaffianMatrix first5, second5, third5, six;
  Poly printed_pf2345;  // the 23.45 Pfaffian as printed
  // Leading parts of S0, S1, S2 and the monomials listed as spanning the
  // rest of each relation.
  std::vector<Poly> listed_lhs;
  std::vector<std::vector<Poly>> listed_spans;
};

UnprojectionData main_example_data();

struct KustinMillerSystem {
  GradedMatrix lhs;           // J * transpose(M), 6x3 over `base`
  std::vector<Poly> rhs;      // N * fcoeff
  std::vector<Poly> relations;  // R1..R6 in `ext`: lhs * (s2, s1, s0) - rhs
};

// Throws std::invalid_argument (naming the entry) unless M * N equals
// (0; 0; f g h).
KustinMillerSystem build_kustin_miller_system(const UnprojectionData& data);

void verify_solved_products(const UnprojectionData& data, const std::vector<Poly>& r, UnprojectionReport& report);
void verify_syzygies_and_divisibility(const UnprojectionData& data, const std::vector<Poly>& r,
                                      UnprojectionReport& report);

enum class MainVariant { Standard, MinusZf, NoZf };

struct MainOptions {
  MainVariant variant = MainVariant::Standard;
  // "s2sign": replace s2 by -s2 in S2 before the Pfaffian checks.
  std::string fault;
};

UnprojectionReport run_main_example(const MainOptions& options = {});

// ---- the symmetric determinantal example --------------------------------

struct DeterminantalData {
  unsigned seed = 0;
  RingPtr ring;                      // x1..x4 (weight 2), y1..y4 (weight 3)
  std::vector<std::vector<std::vector<int>>> coefficients;  // A_k, M = sum x_k A_k
  PolyMatrix m;
  PolyMatrix adjugate;
  std::vector<Poly> equations;  // M y (4), then y_i y_j - adj_ij for i <= j (10)
};

// Seeded construction with coefficients in {-3..3}; A_1 vanishes outside
// its lower right 2x2 block so that (1:0:0:0) is a node with local
// coordinates y1, y2.
DeterminantalData determinantal_data(unsigned seed);

UnprojectionReport run_determinantal_example(unsigned seed);
// Retries with seed+1, ... while the report marks the seed degenerate;
// at most `attempts` runs. Earlier attempts are kept as INFO entries.
UnprojectionReport run_determinantal_with_retry(unsigned seed, int attempts = 5);

}  // namespace wpcas
