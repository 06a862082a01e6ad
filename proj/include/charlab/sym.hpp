#pragma once

#include <string>

#include "charlab/scalar.hpp"
#include "charlab/scalar_io.hpp"

namespace charlab {

/// Value in the group algebra Q(sqrt 3)[eps, delta] with eps^2 = delta^2 = 1:
/// c1 + ce*eps + cd*delta + ced*eps*delta.  The two formal signs carry the
/// candidate families' sign freedom through exact computations; instantiating
/// eps, delta = +-1 recovers a Scalar.
struct SymValue {
  Scalar c1, ce, cd, ced;

  SymValue() = default;
  SymValue(long long n) : c1(n) {}  // NOLINT
  explicit SymValue(Scalar v) : c1(std::move(v)) {}

  static SymValue eps() {
    SymValue v;
    v.ce = Scalar(1);
    return v;
  }
  static SymValue delta() {
    SymValue v;
    v.cd = Scalar(1);
    return v;
  }

  bool is_zero() const { return c1.is_zero() && ce.is_zero() && cd.is_zero() && ced.is_zero(); }
  bool is_concrete() const { return ce.is_zero() && cd.is_zero() && ced.is_zero(); }

  SymValue operator-() const {
    SymValue v;
    v.c1 = -c1;
    v.ce = -ce;
    v.cd = -cd;
    v.ced = -ced;
    return v;
  }
  SymValue& operator+=(const SymValue& o) {
    c1 += o.c1;
    ce += o.ce;
    cd += o.cd;
    ced += o.ced;
    return *this;
  }
  SymValue& operator-=(const SymValue& o) { return *this += -o; }
  friend SymValue operator+(SymValue a, const SymValue& b) { return a += b; }
  friend SymValue operator-(SymValue a, const SymValue& b) { return a -= b; }

  friend SymValue operator*(const SymValue& a, const SymValue& b) {
    SymValue r;
    // Multiplication table of {1, e, d, ed} with e^2 = d^2 = 1.
    r.c1 = a.c1 * b.c1 + a.ce * b.ce + a.cd * b.cd + a.ced * b.ced;
    r.ce = a.c1 * b.ce + a.ce * b.c1 + a.cd * b.ced + a.ced * b.cd;
    r.cd = a.c1 * b.cd + a.cd * b.c1 + a.ce * b.ced + a.ced * b.ce;
    r.ced = a.c1 * b.ced + a.ced * b.c1 + a.ce * b.cd + a.cd * b.ce;
    return r;
  }

  friend bool operator==(const SymValue& a, const SymValue& b) {
    return a.c1 == b.c1 && a.ce == b.ce && a.cd == b.cd && a.ced == b.ced;
  }

  Scalar instantiate(int eps_sign, int delta_sign) const {
    Scalar e(eps_sign), d(delta_sign);
    return c1 + ce * e + cd * d + ced * e * d;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    auto add = [&](const Scalar& c, const std::string& sym) {
      if (c.is_zero()) return;
      std::string part = render_scalar(c);
      if (!sym.empty()) {
        if (part == "1") part = sym;
        else if (part == "-1") part = "-" + sym;
        else part += "*" + sym;
      }
      if (!out.empty() && part[0] != '-') out += "+";
      out += part;
    };
    add(c1, "");
    add(ce, "eps");
    add(cd, "delta");
    add(ced, "eps*delta");
    return out;
  }
};

}  // namespace charlab
