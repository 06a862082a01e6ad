#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

#include "charlab/errors.hpp"

namespace charlab {

// Enumeration of multisets of integer vectors {v} with sum v v^T equal to a
// prescribed symmetric target, modulo per-vector sign flips and permutations
// of the multiset.  Canonical form: each vector's first nonzero entry is
// positive and vectors are listed in decreasing lexicographic order.
//
// In residual mode the off-diagonal of the target must be met exactly while
// the diagonal may fall short; the slack per row is reported as a residual.
// Vectors supported on a single row are then excluded from the search (any
// residual can be realized by single-row columns), which is what makes the
// candidate sets finite presentations of the solution families.

struct GramEnumOptions {
  bool residual_mode = false;
  int max_vectors = 64;  // bound on the number of enumerated vectors
  int jobs = 1;
};

struct GramSolution {
  std::vector<std::vector<long long>> vectors;  // canonical order
  std::vector<long long> residual;              // per row; all zero unless residual_mode

  friend bool operator==(const GramSolution& a, const GramSolution& b) {
    return a.vectors == b.vectors && a.residual == b.residual;
  }
  friend bool operator<(const GramSolution& a, const GramSolution& b) {
    if (a.vectors != b.vectors) return a.vectors < b.vectors;
    return a.residual < b.residual;
  }
};

namespace gramdetail {

inline long long isqrt_ll(long long n) {
  if (n <= 0) return 0;
  long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

inline int count_nonzero(const std::vector<long long>& v) {
  int c = 0;
  for (long long x : v) c += (x != 0);
  return c;
}

inline bool off_diag_clear(const std::vector<std::vector<long long>>& rem) {
  for (size_t i = 0; i < rem.size(); ++i)
    for (size_t j = i + 1; j < rem.size(); ++j)
      if (rem[i][j] != 0) return false;
  return true;
}

inline bool diag_clear(const std::vector<std::vector<long long>>& rem) {
  for (size_t i = 0; i < rem.size(); ++i)
    if (rem[i][i] != 0) return false;
  return true;
}

/// Cauchy-Schwarz feasibility: |rem_ij| can still be cancelled only if
/// rem_ij^2 <= rem_ii rem_jj.
inline bool cs_feasible(const std::vector<std::vector<long long>>& rem) {
  for (size_t i = 0; i < rem.size(); ++i)
    for (size_t j = i + 1; j < rem.size(); ++j)
      if (rem[i][j] * rem[i][j] > rem[i][i] * rem[j][j]) return false;
  return true;
}

struct Enumerator {
  size_t n;
  GramEnumOptions opt;
  std::vector<GramSolution>* out;

  int min_support() const { return opt.residual_mode ? 2 : 1; }

  void record(const std::vector<std::vector<long long>>& chosen,
              const std::vector<std::vector<long long>>& rem) {
    GramSolution s;
    s.vectors = chosen;
    s.residual.resize(n);
    for (size_t i = 0; i < n; ++i) s.residual[i] = rem[i][i];
    out->push_back(std::move(s));
  }

  /// Enumerate candidate next vectors v with v <= bound lexicographically,
  /// v_i^2 <= rem_ii, sign-canonical, support >= min_support; call f(v).
  void for_each_vector(const std::vector<std::vector<long long>>& rem,
                       const std::vector<long long>* bound,
                       const std::function<void(const std::vector<long long>&)>& f) const {
    std::vector<long long> v(n, 0);
    build(rem, bound, 0, true, false, v, f);
  }

  void build(const std::vector<std::vector<long long>>& rem, const std::vector<long long>* bound,
             size_t pos, bool tight, bool seen_nonzero, std::vector<long long>& v,
             const std::function<void(const std::vector<long long>&)>& f) const {
    if (pos == n) {
      if (count_nonzero(v) >= min_support()) f(v);
      return;
    }
    long long cap = isqrt_ll(rem[pos][pos]);
    long long hi = cap, lo = -cap;
    if (!seen_nonzero) lo = 0;  // sign canonicalization
    if (tight && bound) hi = std::min(hi, (*bound)[pos]);
    for (long long x = hi; x >= lo; --x) {
      bool still_tight = tight && bound && x == (*bound)[pos];
      v[pos] = x;
      build(rem, bound, pos + 1, still_tight, seen_nonzero || x != 0, v, f);
    }
    v[pos] = 0;
  }

  static void apply(std::vector<std::vector<long long>>& rem, const std::vector<long long>& v,
                    int sign) {
    for (size_t i = 0; i < rem.size(); ++i)
      for (size_t j = 0; j < rem.size(); ++j) rem[i][j] += sign * v[i] * v[j];
  }

  void dfs(std::vector<std::vector<long long>>& rem, std::vector<std::vector<long long>>& chosen,
           const std::vector<long long>* bound) {
    if (off_diag_clear(rem) && (opt.residual_mode || diag_clear(rem))) record(chosen, rem);
    if (static_cast<int>(chosen.size()) >= opt.max_vectors) return;
    for_each_vector(rem, bound, [&](const std::vector<long long>& v) {
      apply(rem, v, -1);
      if (cs_feasible(rem)) {
        chosen.push_back(v);
        dfs(rem, chosen, &chosen.back());
        chosen.pop_back();
      }
      apply(rem, v, +1);
    });
  }
};

}  // namespace gramdetail

inline std::vector<GramSolution> enumerate_gram_vectors(
    const std::vector<std::vector<long long>>& target, const GramEnumOptions& opt) {
  size_t n = target.size();
  for (const auto& row : target)
    if (row.size() != n) throw DimensionMismatch("gram target must be square");
  for (size_t i = 0; i < n; ++i) {
    if (target[i][i] < 0) return {};
    for (size_t j = 0; j < n; ++j)
      if (target[i][j] != target[j][i]) throw DimensionMismatch("gram target must be symmetric");
  }

  gramdetail::Enumerator root{n, opt, nullptr};
  if (opt.jobs <= 1) {
    std::vector<GramSolution> out;
    root.out = &out;
    auto rem = target;
    std::vector<std::vector<long long>> chosen;
    chosen.reserve(opt.max_vectors + 2);  // bound pointers must stay valid
    root.dfs(rem, chosen, nullptr);
    std::sort(out.begin(), out.end());
    return out;
  }

  // Deterministic parallelism: split on the first vector, merge in order.
  struct Task {
    std::vector<long long> first;
  };
  std::vector<Task> tasks;
  {
    auto rem = target;
    root.for_each_vector(rem, nullptr, [&](const std::vector<long long>& v) {
      tasks.push_back({v});
    });
  }
  std::vector<std::vector<GramSolution>> results(tasks.size());
  // The empty-prefix solution (target already clear off-diagonal).
  std::vector<GramSolution> base;
  {
    gramdetail::Enumerator e{n, opt, &base};
    auto rem = target;
    if (gramdetail::off_diag_clear(rem) && (opt.residual_mode || gramdetail::diag_clear(rem))) {
      std::vector<std::vector<long long>> none;
      e.record(none, rem);
    }
  }
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      size_t t = next.fetch_add(1);
      if (t >= tasks.size()) return;
      gramdetail::Enumerator e{n, opt, &results[t]};
      auto rem = target;
      std::vector<std::vector<long long>> chosen;
      chosen.reserve(opt.max_vectors + 2);  // bound pointers must stay valid
      gramdetail::Enumerator::apply(rem, tasks[t].first, -1);
      if (!gramdetail::cs_feasible(rem)) continue;
      chosen.push_back(tasks[t].first);
      e.dfs(rem, chosen, &chosen.back());
    }
  };
  std::vector<std::thread> threads;
  for (int i = 0; i < opt.jobs; ++i) threads.emplace_back(worker);
  for (auto& th : threads) th.join();
  std::vector<GramSolution> out = std::move(base);
  for (auto& rs : results)
    for (auto& s : rs) out.push_back(std::move(s));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace charlab
