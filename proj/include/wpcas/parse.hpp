#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "wpcas/poly.hpp"

namespace wpcas {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Grammar (whitespace insignificant, no implicit multiplication):
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (('*' factor) | ('/' integer))*
//   factor := ('+'|'-') factor | atom ['^' integer]
//   atom   := integer | identifier | '(' expr ')'
// Exponents are positive integers. Division is only by a nonzero integer
// literal, which is what printed rational coefficients need.
Poly parse_poly(std::string_view text, const RingPtr& ring);

}  // namespace wpcas
