#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "charlab/chartable.hpp"
#include "charlab/errors.hpp"
#include "charlab/gram_enum.hpp"
#include "charlab/matrix.hpp"
#include "charlab/poly.hpp"
#include "charlab/sym.hpp"

namespace charlab {

// Suzuki's method of special classes.  Given a subgroup table H and a set of
// special classes, the space W of class functions vanishing off the set has
// dimension n; induction to the ambient group preserves inner products on W,
// so integral decompositions of the induced functions can be enumerated from
// the Gram matrix alone and partial character values of the ambient group
// recovered through the gamma-expansion matrix C.

struct SpecialClassSet {
  const CharacterTable* table = nullptr;
  std::vector<size_t> class_indices;  // ordered, non-empty, no duplicates
  std::string assumptions;            // provenance notes for conditions (i)-(iii)
};

inline SpecialClassSet make_special_class_set(const CharacterTable& t,
                                              const std::vector<std::string>& names,
                                              std::string assumptions = {}) {
  SpecialClassSet s;
  s.table = &t;
  for (const auto& n : names) {
    size_t idx = t.class_index(n);
    if (std::find(s.class_indices.begin(), s.class_indices.end(), idx) != s.class_indices.end())
      throw StructureError("duplicate special class " + n);
    s.class_indices.push_back(idx);
  }
  if (s.class_indices.empty()) throw StructureError("special class set cannot be empty");
  s.assumptions = std::move(assumptions);
  return s;
}

struct VanishingBasis {
  SpecialClassSet set;
  Mat<Scalar> coeffs;  // n x r: basis[i] = sum_j coeffs[i][j] * psi_j

  size_t dimension() const { return coeffs.rows(); }

  ClassFunction function(size_t i) const {
    const CharacterTable& t = *set.table;
    ClassFunction f = ClassFunction::zero(t);
    for (size_t j = 0; j < t.num_classes(); ++j) {
      if (coeffs[i][j].is_zero()) continue;
      for (size_t k = 0; k < t.num_classes(); ++k)
        f.values[k] += coeffs[i][j] * t.chr(j).values[k];
    }
    return f;
  }

  /// lambda_i evaluated on the special classes only, as an n x n matrix.
  Mat<Scalar> values_on_special() const {
    size_t n = set.class_indices.size();
    Mat<Scalar> m(dimension(), n);
    for (size_t i = 0; i < dimension(); ++i) {
      ClassFunction f = function(i);
      for (size_t l = 0; l < n; ++l) m[i][l] = f.values[set.class_indices[l]];
    }
    return m;
  }
};

namespace suzukidetail {

inline void check_vanishing(const VanishingBasis& vb) {
  const CharacterTable& t = *vb.set.table;
  for (size_t i = 0; i < vb.dimension(); ++i) {
    ClassFunction f = vb.function(i);
    for (size_t k = 0; k < t.num_classes(); ++k) {
      bool special = std::find(vb.set.class_indices.begin(), vb.set.class_indices.end(), k) !=
                     vb.set.class_indices.end();
      if (!special && !f.values[k].is_zero())
        throw StructureError("basis function " + std::to_string(i + 1) +
                             " does not vanish off the special classes");
    }
  }
}

}  // namespace suzukidetail

/// Canonical basis of the space of class functions vanishing off the special
/// classes, with psi-coefficients from the reduced echelon null space of the
/// non-special value columns.  Its dimension always equals the number of
/// special classes.
inline VanishingBasis vanishing_basis(const SpecialClassSet& set) {
  const CharacterTable& t = *set.table;
  size_t r = t.num_classes();
  std::vector<size_t> non_special;
  for (size_t k = 0; k < r; ++k)
    if (std::find(set.class_indices.begin(), set.class_indices.end(), k) ==
        set.class_indices.end())
      non_special.push_back(k);
  // Constraint rows: sum_j c_j psi_j(x_k) = 0 for each non-special class k.
  Mat<Scalar> constraints(non_special.size(), r);
  for (size_t row = 0; row < non_special.size(); ++row)
    for (size_t j = 0; j < r; ++j) constraints[row][j] = t.chr(j).values[non_special[row]];
  std::vector<std::vector<Scalar>> basis = null_space(constraints);
  if (basis.size() != set.class_indices.size())
    throw StructureError("vanishing space has dimension " + std::to_string(basis.size()) +
                         ", expected " + std::to_string(set.class_indices.size()));
  VanishingBasis vb;
  vb.set = set;
  vb.coeffs = Mat<Scalar>(std::move(basis));
  suzukidetail::check_vanishing(vb);
  return vb;
}

/// Basis from explicit psi-coefficient rows (e.g. a hand-picked basis);
/// validates vanishing and linear independence.
inline VanishingBasis vanishing_basis_from_coeffs(const SpecialClassSet& set, Mat<Scalar> rows) {
  if (rows.rows() != set.class_indices.size() || rows.cols() != set.table->num_classes())
    throw DimensionMismatch("basis coefficient matrix has wrong shape");
  VanishingBasis vb;
  vb.set = set;
  vb.coeffs = std::move(rows);
  suzukidetail::check_vanishing(vb);
  Mat<Scalar> vals = vb.values_on_special();
  inverse(vals);  // throws SingularMatrix when dependent
  return vb;
}

/// S with paper_basis[i] = sum_k S[i][k] * canonical_basis[k]; both bases
/// must span the same space (functions in W are determined by their values
/// on the special classes).
inline Mat<Scalar> change_of_basis(const VanishingBasis& from, const VanishingBasis& to) {
  if (from.set.table != to.set.table || from.set.class_indices != to.set.class_indices)
    throw TableMismatch("bases over different special class sets");
  return from.values_on_special() * inverse(to.values_on_special());
}

struct GammaExpansion {
  Mat<Scalar> C;  // n x n: gamma_i = sum_k C[i][k] lambda_k
};

/// gamma_i := sum_j psi_j(x_i) psi_j lies in W; its lambda-coordinates form
/// the matrix C.  Verified two ways: (C A)[i][j] = psi_j(x_i) exactly, and
/// the expansion evaluates back to gamma_i on every class.
inline GammaExpansion gamma_expansion(const VanishingBasis& vb) {
  const CharacterTable& t = *vb.set.table;
  size_t n = vb.set.class_indices.size();
  // gamma_i(x_l) = delta_il |C(x_i)| by column orthogonality, so C solves
  // D = C * Lambda with Lambda[k][l] = lambda_k(x_l).
  Mat<Scalar> lambda_vals = vb.values_on_special();
  Mat<Scalar> d(n, n);
  for (size_t i = 0; i < n; ++i)
    d[i][i] = Scalar(t.cls(vb.set.class_indices[i]).centralizer_order);
  Mat<Scalar> c;
  try {
    c = d * inverse(lambda_vals);
  } catch (const SingularMatrix&) {
    throw SingularBasis("vanishing basis is singular on the special classes");
  }

  // Verification 1: (C A)[i][j] = psi_j(x_i).
  Mat<Scalar> ca = c * vb.coeffs;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < t.num_classes(); ++j)
      if (ca[i][j] != t.chr(j).values[vb.set.class_indices[i]])
        throw SingularBasis("gamma expansion failed the CA identity");
  // Verification 2: direct evaluation on all classes.
  for (size_t i = 0; i < n; ++i) {
    ClassFunction expanded = ClassFunction::zero(t);
    for (size_t k = 0; k < n; ++k) {
      ClassFunction lk = vb.function(k);
      expanded += c[i][k] * lk;
    }
    for (size_t cls = 0; cls < t.num_classes(); ++cls) {
      Scalar gamma;
      for (size_t j = 0; j < t.num_classes(); ++j)
        gamma += t.chr(j).values[vb.set.class_indices[i]] * t.chr(j).values[cls];
      if (expanded.values[cls] != gamma)
        throw SingularBasis("gamma expansion failed direct evaluation");
    }
  }
  return GammaExpansion{std::move(c)};
}

/// Gram matrix of the induced functions mu_i = lambda_i^G, computed entirely
/// inside H: (mu_i, mu_j)_G = (lambda_i, lambda_j)_H.
inline Mat<Scalar> induced_gram(const VanishingBasis& vb) {
  size_t n = vb.dimension();
  std::vector<ClassFunction> fns;
  for (size_t i = 0; i < n; ++i) fns.push_back(vb.function(i));
  Mat<Scalar> g(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) g[i][j] = inner_product(fns[i], fns[j]);
  return g;
}

inline std::vector<std::vector<long long>> to_integer_matrix(const Mat<Scalar>& m) {
  std::vector<std::vector<long long>> out(m.rows(), std::vector<long long>(m.cols()));
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) {
      if (!m[i][j].is_rational_integer())
        throw NonIntegerValue("matrix entry is not a rational integer");
      out[i][j] = static_cast<long long>(m[i][j].rat.num());
    }
  return out;
}

// --- Decomposition enumeration -------------------------------------------

/// One family of integral decompositions mu_i = sum_j b_ij theta_j:
/// the columns meeting at least two rows (canonical form), a fixed trivial
/// column pinned first, and per-row residual norms.  A residual r on row i
/// stands for further columns supported on row i alone (any multiset of
/// integers with squares summing to r); those are not part of the candidate's
/// identity, exactly as the tail theta's stay undetermined in the method.
struct DecompositionCandidate {
  std::vector<long long> trivial_column;
  std::vector<std::vector<long long>> shared_columns;  // canonical order
  std::vector<long long> residual;
  std::vector<size_t> degree_zero_rows;

  friend bool operator==(const DecompositionCandidate& a, const DecompositionCandidate& b) {
    return a.trivial_column == b.trivial_column && a.shared_columns == b.shared_columns &&
           a.residual == b.residual;
  }
  friend bool operator<(const DecompositionCandidate& a, const DecompositionCandidate& b) {
    if (a.shared_columns != b.shared_columns) return a.shared_columns < b.shared_columns;
    return a.residual < b.residual;
  }
};

/// All decompositions B with B B^T = gram and the prescribed trivial column,
/// modulo column permutations and sign flips, single-row columns abstracted
/// into residuals.  Throws InfeasibleGram when there are none.
inline std::vector<DecompositionCandidate> enumerate_decompositions(
    const std::vector<std::vector<long long>>& gram, const std::vector<long long>& trivial_column,
    const std::vector<size_t>& degree_zero_rows, int jobs = 1) {
  size_t n = gram.size();
  if (trivial_column.size() != n) throw DimensionMismatch("trivial column has wrong length");
  {
    Mat<Rational> g(n, n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) g[i][j] = Rational(gram[i][j]);
    if (!is_positive_semidefinite(g)) throw InfeasibleGram("gram matrix is not PSD");
  }
  std::vector<std::vector<long long>> target = gram;
  long long max_cols = 0;
  for (size_t i = 0; i < n; ++i) {
    max_cols += gram[i][i];
    for (size_t j = 0; j < n; ++j) target[i][j] -= trivial_column[i] * trivial_column[j];
    if (target[i][i] < 0) throw InfeasibleGram("trivial column exceeds the gram diagonal");
  }
  GramEnumOptions opt;
  opt.residual_mode = true;
  opt.max_vectors = static_cast<int>(max_cols);
  opt.jobs = jobs;
  std::vector<GramSolution> sols = enumerate_gram_vectors(target, opt);
  if (sols.empty()) throw InfeasibleGram("no integral decompositions exist");
  std::vector<DecompositionCandidate> out;
  for (auto& s : sols) {
    DecompositionCandidate c;
    c.trivial_column = trivial_column;
    c.shared_columns = std::move(s.vectors);
    c.residual = std::move(s.residual);
    c.degree_zero_rows = degree_zero_rows;
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Canonical form of a concrete decomposition matrix (columns of B beyond the
/// trivial one): sign-normalize, abstract single-support columns, sort.
/// Used by the naive-search oracle and the symmetry tests.
inline DecompositionCandidate canonicalize_decomposition(
    const std::vector<long long>& trivial_column,
    std::vector<std::vector<long long>> other_columns) {
  DecompositionCandidate c;
  c.trivial_column = trivial_column;
  c.residual.assign(trivial_column.size(), 0);
  for (auto& col : other_columns) {
    int support = 0;
    size_t last = 0;
    for (size_t i = 0; i < col.size(); ++i)
      if (col[i] != 0) {
        ++support;
        last = i;
      }
    if (support == 0) continue;
    if (support == 1) {
      c.residual[last] += col[last] * col[last];
      continue;
    }
    for (size_t i = 0; i < col.size(); ++i)
      if (col[i] != 0) {
        if (col[i] < 0)
          for (auto& x : col) x = -x;
        break;
      }
    c.shared_columns.push_back(col);
  }
  std::sort(c.shared_columns.begin(), c.shared_columns.end(),
            [](const auto& a, const auto& b) { return b < a; });  // descending
  return c;
}

}  // namespace charlab
