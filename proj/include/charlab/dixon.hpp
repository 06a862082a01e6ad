#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "charlab/chartable.hpp"
#include "charlab/errors.hpp"
#include "charlab/permgroup.hpp"

namespace charlab {

// Burnside--Dixon character table computation.
//
// The class-sum matrices M_i with (M_i)[k][j] = a_{ijk} commute and act on
// the centre of the group algebra.  Over a prime field F_p with
// p == 1 (mod exponent G) and p >= 2*ceil(sqrt |G|) their simultaneous
// eigenvectors are in bijection with the irreducible characters; the
// eigenvalue of M_i is omega_i = |class i| * chi(x_i) / chi(1) mod p.
// Degrees are recovered from sum_i omega_i omega_{i*} / h_i = |G| / chi(1)^2
// (the two mod-p square roots differ by p, and only one is < p/2), and the
// exact character values are lifted from F_p into Z[zeta_n] by reading off
// root-of-unity multiplicities, then forced into Q(sqrt 3).

namespace dixonimpl {

inline long long mod_pow(long long b, long long e, long long p) {
  long long r = 1 % p;
  b %= p;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

inline long long mod_inv(long long a, long long p) { return mod_pow(((a % p) + p) % p, p - 2, p); }

inline bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline long long least_primitive_root(long long p) {
  if (p == 2) return 1;
  std::vector<long long> prime_factors;
  long long m = p - 1;
  for (long long d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      prime_factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) prime_factors.push_back(m);
  for (long long g = 2; g < p; ++g) {
    bool ok = true;
    for (long long q : prime_factors)
      if (mod_pow(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw std::logic_error("no primitive root found");
}

using Vec = std::vector<long long>;
using Matrix = std::vector<Vec>;

/// Solution space basis of (A - lambda I) v = 0 intersected with the span of
/// `basis`; A acts on coordinates of the ambient space.
inline std::vector<Vec> eigenspace_in_subspace(const Matrix& a, long long lambda,
                                               const std::vector<Vec>& basis, long long p) {
  size_t dim = basis.size(), n = basis[0].size();
  // Rows of m: images (A - lambda) b_t expressed in ambient coordinates;
  // solve for coefficient vectors c with sum_t c_t (A - lambda) b_t = 0.
  Matrix m(n, Vec(dim, 0));
  for (size_t t = 0; t < dim; ++t)
    for (size_t r = 0; r < n; ++r) {
      long long s = 0;
      for (size_t c = 0; c < n; ++c) s = (s + a[r][c] * basis[t][c]) % p;
      s = (s - lambda * basis[t][r]) % p;
      m[r][t] = ((s % p) + p) % p;
    }
  // Gaussian elimination for the null space of m (n x dim).
  std::vector<int> pivot_of_col(dim, -1);
  size_t row = 0;
  for (size_t col = 0; col < dim && row < n; ++col) {
    size_t sel = row;
    while (sel < n && m[sel][col] == 0) ++sel;
    if (sel == n) continue;
    std::swap(m[sel], m[row]);
    long long inv = mod_inv(m[row][col], p);
    for (size_t j = col; j < dim; ++j) m[row][j] = m[row][j] * inv % p;
    for (size_t i = 0; i < n; ++i) {
      if (i == row || m[i][col] == 0) continue;
      long long f = m[i][col];
      for (size_t j = col; j < dim; ++j) m[i][j] = ((m[i][j] - f * m[row][j]) % p + p) % p;
    }
    pivot_of_col[col] = static_cast<int>(row);
    ++row;
  }
  std::vector<Vec> out;
  for (size_t free = 0; free < dim; ++free) {
    if (pivot_of_col[free] >= 0) continue;
    Vec coeff(dim, 0);
    coeff[free] = 1;
    for (size_t col = 0; col < dim; ++col)
      if (pivot_of_col[col] >= 0) coeff[col] = (p - m[pivot_of_col[col]][free]) % p;
    Vec v(n, 0);
    for (size_t t = 0; t < dim; ++t)
      for (size_t r = 0; r < n; ++r) v[r] = (v[r] + coeff[t] * basis[t][r]) % p;
    out.push_back(std::move(v));
  }
  return out;
}

/// Cyclotomic polynomial Phi_n over Z, by exact division of x^n - 1.
inline std::vector<BigInt> cyclotomic(long long n) {
  auto poly_div = [](std::vector<BigInt> num, const std::vector<BigInt>& den) {
    std::vector<BigInt> q(num.size() - den.size() + 1, BigInt(0));
    for (size_t i = num.size(); i-- >= den.size() && i + 1 >= den.size();) {
      size_t qi = i - (den.size() - 1);
      BigInt f = num[i] / den.back();
      q[qi] = f;
      for (size_t j = 0; j < den.size(); ++j) num[qi + j] -= f * den[j];
      if (qi == 0) break;
    }
    return q;
  };
  // Phi_d for every divisor d of n in turn: (x^d - 1) divided by all earlier
  // cyclotomics of divisors of d.
  std::vector<std::vector<BigInt>> phi(n + 1);
  for (long long d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    std::vector<BigInt> num(d + 1, BigInt(0));
    num[0] = -1;
    num[d] = 1;
    for (long long e = 1; e < d; ++e)
      if (d % e == 0) num = poly_div(std::move(num), phi[e]);
    phi[d] = std::move(num);
  }
  return phi[n];
}

/// x^k mod Phi (Phi monic).
inline std::vector<Rational> power_mod_phi(long long k, const std::vector<BigInt>& phi) {
  size_t deg = phi.size() - 1;
  std::vector<Rational> v(deg, Rational(0));
  if (deg == 0) return v;
  // Repeated reduction: maintain coefficients of x^k reduced.
  std::vector<Rational> cur(deg, Rational(0));
  cur[0] = Rational(1);
  for (long long step = 0; step < k; ++step) {
    // multiply by x
    Rational top = cur[deg - 1];
    for (size_t i = deg - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = Rational(0);
    if (!top.is_zero())
      for (size_t i = 0; i < deg; ++i) cur[i] -= top * Rational(phi[i]);
  }
  return cur;
}

}  // namespace dixonimpl

/// Complete ordinary character table of a materialized permutation group,
/// with values constrained to Q(sqrt 3).  Throws ValueOutsideRing when some
/// character value lies outside that ring (e.g. cube roots of unity).
inline CharacterTable dixon_character_table(const PermGroup& g) {
  using namespace dixonimpl;
  const auto& classes = g.classes();
  size_t r = classes.size();
  if (r > 32) throw CapExceeded("class count above 32 is out of scope for the Dixon solver");

  long long order = g.order();
  long long exponent = g.exponent();

  // Smallest p == 1 (mod exponent) with p >= 2*ceil(sqrt |G|).
  long long sqrt_floor = static_cast<long long>(std::sqrt(static_cast<double>(order)));
  while (sqrt_floor * sqrt_floor > order) --sqrt_floor;
  while ((sqrt_floor + 1) * (sqrt_floor + 1) <= order) ++sqrt_floor;
  long long min_p = std::max<long long>(
      3, 2 * (sqrt_floor * sqrt_floor == order ? sqrt_floor : sqrt_floor + 1));
  long long p = exponent + 1;
  while (p < min_p || !is_prime(p)) p += exponent;

  auto a = g.all_structure_constants();

  // Class matrices mod p: (M_i)[k][j] = a_{ijk}.
  std::vector<Matrix> class_mats(r, Matrix(r, Vec(r, 0)));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j)
      for (size_t k = 0; k < r; ++k) class_mats[i][k][j] = a[i][j][k] % p;

  // Split the ambient space into common eigenspaces.
  std::vector<std::vector<Vec>> spaces;
  {
    std::vector<Vec> whole;
    for (size_t i = 0; i < r; ++i) {
      Vec e(r, 0);
      e[i] = 1;
      whole.push_back(std::move(e));
    }
    spaces.push_back(std::move(whole));
  }
  for (size_t i = 1; i < r; ++i) {
    bool all_one_dim = true;
    for (const auto& s : spaces) all_one_dim &= (s.size() == 1);
    if (all_one_dim) break;
    std::vector<std::vector<Vec>> next;
    for (auto& s : spaces) {
      if (s.size() == 1) {
        next.push_back(std::move(s));
        continue;
      }
      size_t found = 0;
      for (long long lambda = 0; lambda < p && found < s.size(); ++lambda) {
        auto sub = eigenspace_in_subspace(class_mats[i], lambda, s, p);
        if (!sub.empty()) {
          found += sub.size();
          next.push_back(std::move(sub));
        }
      }
      if (found != s.size()) throw std::logic_error("eigenspace split lost dimensions");
    }
    spaces = std::move(next);
  }
  if (spaces.size() != r) throw std::logic_error("class matrices failed to split the centre");

  // One character per 1-dimensional common eigenspace.
  long long g0 = least_primitive_root(p);
  std::vector<BigInt> phi_cache_n;
  std::vector<Character> chars;
  std::vector<long long> inv_class(r);
  for (size_t k = 0; k < r; ++k) inv_class[k] = g.inverse_class(static_cast<int>(k));

  // Power-map classes: class of rep^e for each class and exponent.
  std::vector<std::vector<int>> power_class(r);
  for (size_t k = 0; k < r; ++k) {
    long long n = classes[k].element_order;
    power_class[k].resize(n);
    Perm pw(g.degree());
    for (long long e = 0; e < n; ++e) {
      power_class[k][e] = g.class_of_element(g.element_index(pw));
      pw = pw * g.element(classes[k].rep);
    }
  }

  for (const auto& space : spaces) {
    const Vec& v = space[0];
    size_t t = 0;
    while (t < r && v[t] == 0) ++t;
    long long vt_inv = mod_inv(v[t], p);
    std::vector<long long> omega(r);
    for (size_t i = 0; i < r; ++i) {
      long long s = 0;
      for (size_t c = 0; c < r; ++c) s = (s + class_mats[i][t][c] * v[c]) % p;
      omega[i] = s * vt_inv % p;
    }
    // |G| / d^2 = sum_i omega_i omega_{i*} / h_i  (all mod p).
    long long s = 0;
    for (size_t i = 0; i < r; ++i)
      s = (s + omega[i] * omega[inv_class[i]] % p * mod_inv(classes[i].size % p, p)) % p;
    long long d2 = order % p * mod_inv(s, p) % p;
    long long d = -1;
    for (long long c = 1; 2 * c < p; ++c)
      if (c * c % p == d2) {
        d = c;
        break;
      }
    if (d < 0 || d * d > order) throw std::logic_error("degree recovery failed");

    // Mod-p character values theta_k = omega_k * d / h_k.
    std::vector<long long> theta(r);
    for (size_t k = 0; k < r; ++k)
      theta[k] = omega[k] * (d % p) % p * mod_inv(classes[k].size % p, p) % p;

    Character ch;
    ch.name = "chi";
    ch.values.resize(r);
    for (size_t k = 0; k < r; ++k) {
      long long n = classes[k].element_order;
      // Multiplicity of zeta_n^j among the d eigenvalues of the image of the
      // representative: m_j = (1/n) sum_e theta(rep^e) lambda^{-je}.
      long long lambda = mod_pow(g0, (p - 1) / n, p);
      long long n_inv = mod_inv(n % p, p);
      std::vector<long long> mult(n);
      long long mult_sum = 0;
      for (long long j = 0; j < n; ++j) {
        long long acc = 0;
        for (long long e = 0; e < n; ++e) {
          long long lam_pow = mod_pow(lambda, ((n - j) % n) * e % n, p);
          acc = (acc + theta[power_class[k][e]] * lam_pow) % p;
        }
        mult[j] = acc * n_inv % p;
        mult_sum += mult[j];
      }
      if (mult_sum != d)
        throw std::logic_error("root-of-unity multiplicities do not sum to the degree");

      // Exact value sum_j mult_j zeta_n^j reduced mod Phi_n, then matched
      // against a + b*sqrt(3); sqrt 3 = zeta_12 + zeta_12^11 needs 12 | n.
      std::vector<BigInt> phi = cyclotomic(n);
      size_t deg = phi.size() - 1;
      std::vector<Rational> val(deg, Rational(0));
      for (long long j = 0; j < n; ++j) {
        if (mult[j] == 0) continue;
        auto pw = power_mod_phi(j, phi);
        for (size_t i = 0; i < deg; ++i) val[i] += Rational(mult[j]) * pw[i];
      }
      Scalar out;
      if (n % 12 == 0) {
        auto s1 = power_mod_phi(n / 12, phi);
        auto s2 = power_mod_phi(11 * n / 12, phi);
        std::vector<Rational> sv(deg);
        for (size_t i = 0; i < deg; ++i) sv[i] = s1[i] + s2[i];
        // Solve val = a*e0 + b*sv exactly.
        Rational b(0);
        bool have_b = false;
        for (size_t i = 1; i < deg; ++i)
          if (!sv[i].is_zero()) {
            b = val[i] / sv[i];
            have_b = true;
            break;
          }
        if (!have_b) throw std::logic_error("sqrt(3) image has no non-constant coordinate");
        for (size_t i = 1; i < deg; ++i)
          if (val[i] != b * sv[i])
            throw ValueOutsideRing("character value outside Q(sqrt 3) on class " +
                                   std::to_string(k + 1));
        out = Scalar(val[0] - b * sv[0], b);
      } else {
        for (size_t i = 1; i < deg; ++i)
          if (!val[i].is_zero())
            throw ValueOutsideRing("character value outside Q on class " + std::to_string(k + 1) +
                                   " (element order " + std::to_string(n) + ")");
        out = Scalar(val.empty() ? Rational(0) : val[0]);
      }
      ch.values[k] = out;
    }
    chars.push_back(std::move(ch));
  }

  // Canonical character order: by degree, then values lexicographically.
  std::sort(chars.begin(), chars.end(), [](const Character& x, const Character& y) {
    if (x.values[0] != y.values[0]) return x.values[0] < y.values[0];
    for (size_t k = 1; k < x.values.size(); ++k)
      if (x.values[k] != y.values[k]) return x.values[k] < y.values[k];
    return false;
  });
  std::vector<ConjClass> table_classes(r);
  for (size_t k = 0; k < r; ++k)
    table_classes[k] = ConjClass{"C" + std::to_string(k + 1), classes[k].element_order,
                                 classes[k].centralizer_order};
  for (size_t i = 0; i < chars.size(); ++i) chars[i].name = "chi" + std::to_string(i + 1);

  CharacterTable table(order, std::move(table_classes), std::move(chars));
  if (!validate_orthogonality(table).ok())
    throw std::logic_error("Dixon output failed orthogonality; internal bug");
  return table;
}

}  // namespace charlab
