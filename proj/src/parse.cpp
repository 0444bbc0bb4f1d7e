#include "wpcas/parse.hpp"

#include <cctype>

namespace wpcas {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Poly parse() {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("empty polynomial", pos_);
    Poly p = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = factor();
    for (;;) {
      if (accept('*')) {
        acc *= factor();
      } else if (accept('/')) {
        skip_ws();
        const std::size_t at = pos_;
        Integer d = integer("divisor");
        if (d == 0) throw ParseError("division by zero", at);
        acc *= Rational(1, d);
      } else {
        return acc;
      }
    }
  }

  Poly factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    Poly base = atom();
    if (accept('^')) {
      skip_ws();
      const std::size_t at = pos_;
      if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+'))
        throw ParseError("exponent must be a positive integer", at);
      if (pos_ == text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        throw ParseError("exponent must be a positive integer", at);
      Integer e = integer("exponent");
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '.')
        throw ParseError("exponent must be a positive integer", at);
      if (e < 1 || e > 65535) throw ParseError("exponent must be a positive integer", at);
      return base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  Poly atom() {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer n = integer("integer");
      return Poly::constant(ring_, Rational(n));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      const auto idx = ring_->index_of(name);
      if (!idx) throw ParseError("unknown variable '" + std::string(name) + "'", start);
      return Poly::variable(ring_, *idx);
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  Integer integer(const char* what) {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError(std::string("expected ") + what, start);
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const RingPtr& ring) { return Parser(text, ring).parse(); }

}  // namespace wpcas
