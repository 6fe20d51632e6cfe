#ifndef EQUICHAIN_PARSE_HPP
#define EQUICHAIN_PARSE_HPP

#include <cctype>
#include <stdexcept>
#include <string>

#include "equichain/polynomial.hpp"

namespace equichain {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

/// Recursive-descent parser for the polynomial grammar
///   poly   := term (('+'|'-') term)*
///   term   := [coeff '*']? factor ('*' factor)* | coeff
///   factor := 'x[' int ',' int ']' ('^' int)? | 'x' int ('^' int)?   (c=1)
///   coeff  := int | int '/' int
/// Whitespace is insignificant.  Variables are validated against the
/// truncation (row <= c, col <= n).
class PolynomialParser {
 public:
  PolynomialParser(const std::string& text, Truncation trunc)
      : text_(text), trunc_(trunc) {}

  PolyQ parse() {
    PolyQ result;
    skip_ws();
    bool negative = accept_sign();
    result = result + parse_term(negative);
    skip_ws();
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '+' || c == '-') {
        ++pos_;
        result = result + parse_term(c == '-');
        skip_ws();
      } else {
        throw ParseError("expected '+' or '-'", pos_);
      }
    }
    return result;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept_sign() {
    skip_ws();
    if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
      return text_[pos_++] == '-';
    }
    return false;
  }

  bool at_digit() {
    skip_ws();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  bool at_var() {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == 'x';
  }

  long parse_int() {
    skip_ws();
    bool neg = false;
    if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-'))
      neg = text_[pos_++] == '-';
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ParseError("expected integer", pos_);
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1000000000L) throw ParseError("integer too large", pos_);
      ++pos_;
    }
    return neg ? -v : v;
  }

  Rational parse_coeff() {
    const std::size_t start = pos_;
    long num = parse_int();
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      long den = parse_int();
      if (den == 0) throw ParseError("zero denominator", start);
      return make_rational(num, den);
    }
    return make_rational(num);
  }

  Monomial parse_factor() {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != 'x') throw ParseError("expected variable", pos_);
    const std::size_t start = pos_;
    ++pos_;
    int row = 1, col = 1;
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '[') {
      ++pos_;
      row = static_cast<int>(parse_int());
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ',') throw ParseError("expected ','", pos_);
      ++pos_;
      col = static_cast<int>(parse_int());
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ']') throw ParseError("expected ']'", pos_);
      ++pos_;
    } else {
      if (trunc_.c != 1) throw ParseError("shorthand x<k> requires c = 1", start);
      col = static_cast<int>(parse_int());
    }
    if (row < 1 || row > trunc_.c)
      throw ParseError("variable row " + std::to_string(row) + " outside truncation c=" +
                           std::to_string(trunc_.c),
                       start);
    if (col < 1 || col > trunc_.n)
      throw ParseError("variable column " + std::to_string(col) + " outside truncation n=" +
                           std::to_string(trunc_.n),
                       start);
    int exp = 1;
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      const long e = parse_int();
      if (e < 0) throw ParseError("negative exponent", start);
      exp = static_cast<int>(e);
    }
    return Monomial::var(row, col, exp);
  }

  PolyQ parse_term(bool negative) {
    skip_ws();
    Rational coeff = make_rational(negative ? -1 : 1);
    Monomial mono = Monomial::one();
    bool have_factor = false;

    if (at_digit()) {
      coeff = coeff * parse_coeff();
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
      } else {
        return PolyQ(mono, coeff);  // bare constant
      }
    }
    for (;;) {
      if (!at_var()) {
        if (!have_factor) throw ParseError("expected variable or coefficient", pos_);
        break;
      }
      mono = mono * parse_factor();
      have_factor = true;
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    return PolyQ(mono, coeff);
  }

  const std::string& text_;
  Truncation trunc_;
  std::size_t pos_ = 0;
};

inline PolyQ parse_polynomial(const std::string& text, Truncation trunc) {
  return PolynomialParser(text, trunc).parse();
}

/// Parse text that must denote a single monomial with coefficient 1.
inline Monomial parse_monomial(const std::string& text, Truncation trunc) {
  const PolyQ p = parse_polynomial(text, trunc);
  if (p.term_count() != 1 || p.terms().begin()->second != Rational(1))
    throw ParseError("expected a monomial with coefficient 1", 0);
  return p.terms().begin()->first;
}

}  // namespace equichain

#endif  // EQUICHAIN_PARSE_HPP
