#pragma once

#include <map>
#include <string>
#include <vector>

#include "wpcas/gbengine.hpp"

namespace wpcas {

// Dense integer polynomial in t, index = exponent.
using TPoly = std::vector<Integer>;

struct HilbertData {
  int bound = 0;
  // dim (R/I)_d for d = 0..bound
  std::vector<Integer> series;
  std::vector<int> weights;
  // Exact numerator from the leading-term ideal, so that the Hilbert series
  // is exact_numerator / prod(1 - t^w).
  TPoly exact_numerator;
};

// Sum of weights plus 5, unless the environment variable
// WPCAS_HILBERT_BOUND holds a non-negative integer.
int default_hilbert_bound(const std::vector<int>& weights);

// Hilbert numerator of the quotient by a monomial ideal.
TPoly monomial_hilbert_numerator(const Ring& ring, std::vector<Monomial> generators);

// Throws std::invalid_argument for inhomogeneous ideals or negative bounds.
HilbertData hilbert_series(const Ideal& ideal, int bound);

// (sum c_d t^d) * prod(1 - t^w) truncated to degrees 0..bound.
TPoly numerator(const HilbertData& h);
// Same, truncated to degrees 0..max_degree; throws std::invalid_argument
// when max_degree exceeds the series bound.
TPoly numerator(const HilbertData& h, int max_degree);

TPoly tpoly_mul(const TPoly& a, const TPoly& b);
void tpoly_trim(TPoly& p);

// "1 - t^12 - t^13 - 2t^14 + ..." ; "0" for the zero polynomial.
std::string format_tpoly(const TPoly& p);

// N(t) = t^n N(1/t) over the index range [0, upto].
bool palindromic(const TPoly& p, int n, int upto);

}  // namespace wpcas
