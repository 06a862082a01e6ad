#pragma once

#include <string>
#include <utility>

#include "charlab/errors.hpp"
#include "charlab/rational.hpp"

namespace charlab {

/// Element of Q(sqrt 3): value = rat + root3 * sqrt(3).
///
/// The representation is unique because 1 and sqrt(3) are linearly
/// independent over Q, so equality is componentwise.  All values handled by
/// this library are real; complex conjugation is the identity.
struct Scalar {
  Rational rat;
  Rational root3;

  Scalar() = default;
  Scalar(long long n) : rat(n) {}  // NOLINT: implicit by design
  Scalar(Rational r) : rat(std::move(r)) {}  // NOLINT
  Scalar(Rational r, Rational s) : rat(std::move(r)), root3(std::move(s)) {}

  static Scalar sqrt3() { return Scalar(Rational(0), Rational(1)); }

  bool is_zero() const { return rat.is_zero() && root3.is_zero(); }
  bool is_rational() const { return root3.is_zero(); }
  bool is_rational_integer() const { return root3.is_zero() && rat.is_integer(); }

  Scalar operator-() const { return Scalar(-rat, -root3); }
  Scalar& operator+=(const Scalar& o) { rat += o.rat; root3 += o.root3; return *this; }
  Scalar& operator-=(const Scalar& o) { rat -= o.rat; root3 -= o.root3; return *this; }
  Scalar& operator*=(const Scalar& o) {
    // (a + b s)(c + d s) = (ac + 3bd) + (ad + bc) s,  s^2 = 3
    Rational a = rat, b = root3;
    rat = a * o.rat + Rational(3) * b * o.root3;
    root3 = a * o.root3 + b * o.rat;
    return *this;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }

  /// Field norm a^2 - 3 b^2; zero exactly when the scalar is zero.
  Rational norm() const { return rat * rat - Rational(3) * root3 * root3; }

  Scalar inverse() const {
    if (is_zero()) throw ZeroInverse("inverse of zero scalar");
    Rational n = norm();
    return Scalar(rat / n, -root3 / n);
  }

  friend Scalar operator/(Scalar a, const Scalar& b) { return a *= b.inverse(); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.rat == b.rat && a.root3 == b.root3;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Exact sign of the real value rat + root3*sqrt(3).
  int sign() const {
    int sr = rat.sign(), ss = root3.sign();
    if (ss == 0) return sr;
    if (sr == 0) return ss;
    if (sr == ss) return sr;
    // Opposite signs: compare rat^2 against 3*root3^2.
    Rational d = rat * rat - Rational(3) * root3 * root3;
    if (d.is_zero()) return 0;  // cannot happen for nonzero scalars, kept for safety
    return d.sign() > 0 ? sr : ss;
  }

  friend bool operator<(const Scalar& a, const Scalar& b) { return (a - b).sign() < 0; }
  friend bool operator>(const Scalar& a, const Scalar& b) { return (a - b).sign() > 0; }

  /// The rational part, required to be a plain integer.
  BigInt to_integer() const {
    if (!is_rational_integer()) throw NonIntegerValue("scalar is not a rational integer");
    return rat.num();
  }
};

}  // namespace charlab
