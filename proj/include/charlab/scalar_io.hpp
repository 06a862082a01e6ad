#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "charlab/errors.hpp"
#include "charlab/scalar.hpp"

namespace charlab {

// Textual scalar syntax shared by every file format in the library:
//   integers        -4
//   rationals       7/81
//   root token      r3            (sqrt 3)
//   compounds       1+2r3   -r3/12   (3+r3)/12
// Whitespace is ignored everywhere.

namespace detail {

struct ScalarLexer {
  std::string_view s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool consume(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool consume_r3() {
    skip_ws();
    if (pos + 1 < s.size() && s[pos] == 'r' && s[pos + 1] == '3') {
      pos += 2;
      return true;
    }
    return false;
  }
  BigInt consume_uint() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw ParseError("expected digits in scalar literal: '" + std::string(s) + "'");
    return BigInt(std::string(s.substr(start, pos - start)));
  }
};

// term := uint? 'r3'? ('/' uint)?   -- at least one of uint / r3 present
inline Scalar parse_term(ScalarLexer& lx, int sign) {
  BigInt coeff = 1;
  bool have_num = false;
  if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
    coeff = lx.consume_uint();
    have_num = true;
  }
  bool is_root = lx.consume_r3();
  if (!have_num && !is_root) throw ParseError("malformed scalar term in '" + std::string(lx.s) + "'");
  BigInt den = 1;
  if (lx.consume('/')) den = lx.consume_uint();
  if (den == 0) throw ParseError("zero denominator in scalar literal");
  Rational q(sign < 0 ? -coeff : coeff, den);
  return is_root ? Scalar(Rational(0), q) : Scalar(q);
}

inline Scalar parse_sum(ScalarLexer& lx);

// primary := '(' sum ')' ('/' uint)? | term
inline Scalar parse_signed_primary(ScalarLexer& lx, int sign) {
  if (lx.consume('(')) {
    Scalar inner = parse_sum(lx);
    if (!lx.consume(')')) throw ParseError("missing ')' in scalar literal");
    if (lx.consume('/')) {
      BigInt den = lx.consume_uint();
      if (den == 0) throw ParseError("zero denominator in scalar literal");
      inner *= Scalar(Rational(BigInt(1), den));
    }
    return sign < 0 ? -inner : inner;
  }
  return parse_term(lx, sign);
}

inline Scalar parse_sum(ScalarLexer& lx) {
  int sign = 1;
  if (lx.consume('-')) sign = -1;
  else lx.consume('+');
  Scalar acc = parse_signed_primary(lx, sign);
  for (;;) {
    if (lx.consume('+')) acc += parse_signed_primary(lx, 1);
    else if (lx.consume('-')) acc += parse_signed_primary(lx, -1);
    else break;
  }
  return acc;
}

}  // namespace detail

inline Scalar parse_scalar(std::string_view text) {
  detail::ScalarLexer lx{text};
  Scalar v = detail::parse_sum(lx);
  if (!lx.eof()) throw ParseError("trailing characters in scalar literal: '" + std::string(text) + "'");
  return v;
}

namespace detail {

// Renders "r3", "-r3", "2r3", "5r3" for an integer sqrt-3 coefficient.
inline std::string root3_part(const BigInt& c) {
  if (c == 1) return "r3";
  if (c == -1) return "-r3";
  return c.str() + "r3";
}

}  // namespace detail

/// Canonical rendering; parse_scalar(render_scalar(x)) == x for all x.
inline std::string render_scalar(const Scalar& x) {
  if (x.root3.is_zero()) return x.rat.str();
  if (x.rat.is_zero()) {
    BigInt n = x.root3.num(), d = x.root3.den();
    std::string head = detail::root3_part(n);
    if (d != 1) head += "/" + d.str();
    return head;
  }
  BigInt d = big_lcm(x.rat.den(), x.root3.den());
  BigInt p = x.rat.num() * (d / x.rat.den());
  BigInt q = x.root3.num() * (d / x.root3.den());
  std::string body = p.str() + (q > 0 ? "+" : "") + detail::root3_part(q);
  if (d == 1) return body;
  return "(" + body + ")/" + d.str();
}

}  // namespace charlab
