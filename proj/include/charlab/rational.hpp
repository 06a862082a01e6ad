#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "charlab/errors.hpp"

namespace charlab {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always in lowest terms with positive denominator.
/// The heavy lifting is delegated to boost::multiprecision::cpp_rational;
/// this wrapper fixes the public surface the rest of the library relies on.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long long n) : v_(n) {}  // NOLINT: implicit by design
  explicit Rational(const BigInt& n) : v_(n) {}
  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw ZeroInverse("rational with zero denominator");
    BigInt n = num, d = den;
    if (d < 0) { n = -n; d = -d; }
    BigInt g = boost::multiprecision::gcd(n < 0 ? BigInt(-n) : n, d);
    if (g > 1) { n /= g; d /= g; }
    v_ = boost::multiprecision::cpp_rational(n, d);
  }
  Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

  BigInt num() const { return boost::multiprecision::numerator(v_); }
  BigInt den() const { return boost::multiprecision::denominator(v_); }

  bool is_zero() const { return v_ == 0; }
  bool is_integer() const { return den() == 1; }
  /// -1, 0 or +1.
  int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }

  Rational operator-() const { return Rational(cpp_rational(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw ZeroInverse("division by zero rational");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  Rational inverse() const {
    if (is_zero()) throw ZeroInverse("inverse of zero");
    return Rational(cpp_rational(1) / v_);
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  /// Largest integer <= value.
  BigInt floor() const {
    BigInt q = num() / den();
    if (num() < 0 && q * den() != num()) q -= 1;
    return q;
  }

  std::string str() const {
    std::string s = num().str();
    if (den() != 1) s += "/" + den().str();
    return s;
  }

 private:
  using cpp_rational = boost::multiprecision::cpp_rational;
  explicit Rational(cpp_rational v) : v_(std::move(v)) {}
  cpp_rational v_;
};

inline BigInt big_gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }
inline BigInt big_lcm(const BigInt& a, const BigInt& b) { return boost::multiprecision::lcm(a, b); }

/// Exact integer square root test: returns true and sets root if n is a
/// perfect square (n >= 0).
inline bool perfect_square(const BigInt& n, BigInt& root) {
  if (n < 0) return false;
  root = boost::multiprecision::sqrt(n);
  return root * root == n;
}

}  // namespace charlab
