#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "charlab/rational.hpp"

namespace charlab {

/// Univariate polynomial over Q, coefficient of x^i at index i.
struct Poly {
  std::vector<Rational> c;

  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs) : c(std::move(coeffs)) { trim(); }
  static Poly constant(Rational v) { return Poly({std::move(v)}); }
  static Poly linear(Rational a1, Rational a0) { return Poly({std::move(a0), std::move(a1)}); }

  void trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }

  Rational eval(const Rational& x) const {
    Rational acc(0);
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> r(std::max(a.c.size(), b.c.size()), Rational(0));
    for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
    return Poly(std::move(r));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> r(a.c.size() + b.c.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c.size(); ++i)
      for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
    return Poly(std::move(r));
  }
  friend Poly operator*(const Rational& s, Poly p) {
    for (auto& x : p.c) x *= s;
    p.trim();
    return p;
  }

  /// Integer-normalized copy: coefficients scaled to coprime integers with a
  /// positive leading coefficient.
  Poly normalized() const {
    if (is_zero()) return Poly();
    BigInt denom(1);
    for (const auto& x : c) denom = big_lcm(denom, x.den());
    std::vector<BigInt> ints;
    BigInt content(0);
    for (const auto& x : c) {
      BigInt v = x.num() * (denom / x.den());
      ints.push_back(v);
      content = big_gcd(content, v < 0 ? BigInt(-v) : v);
    }
    if (content == 0) content = 1;
    if (ints.back() < 0) content = -content;
    std::vector<Rational> out;
    for (const auto& v : ints) out.emplace_back(Rational(v / content));
    return Poly(std::move(out));
  }

  /// All positive integer roots, ascending (rational-root scan on the
  /// integer-normalized polynomial).
  std::vector<BigInt> positive_integer_roots() const {
    std::vector<BigInt> roots;
    Poly p = normalized();
    if (p.is_zero()) return roots;  // identically zero: caller handles
    // Strip x^k factors; x = 0 is not positive.
    size_t shift = 0;
    while (shift < p.c.size() && p.c[shift].is_zero()) ++shift;
    std::vector<Rational> rest(p.c.begin() + shift, p.c.end());
    Poly q(std::move(rest));
    if (q.degree() < 1) return roots;
    BigInt a0 = q.c[0].num();
    if (a0 < 0) a0 = -a0;
    for (BigInt d = 1; d * d <= a0; ++d) {
      if (a0 % d != 0) continue;
      for (BigInt cand : {d, a0 / d}) {
        if (q.eval(Rational(cand)).is_zero() &&
            std::find(roots.begin(), roots.end(), cand) == roots.end())
          roots.push_back(cand);
      }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
  }

  /// Rendering in a named variable, highest power first, e.g.
  /// "d6^2 - 2*d6 + 1".
  std::string str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = c.size(); i-- > 0;) {
      if (c[i].is_zero()) continue;
      Rational v = c[i];
      std::string mag = (v < Rational(0) ? (-v).str() : v.str());
      std::string term;
      if (i == 0) term = mag;
      else {
        term = (mag == "1" ? "" : mag + "*");
        term += var;
        if (i > 1) term += "^" + std::to_string(i);
      }
      if (out.empty()) out = (v < Rational(0) ? "-" : "") + term;
      else out += (v < Rational(0) ? " - " : " + ") + term;
    }
    return out;
  }
};

}  // namespace charlab
