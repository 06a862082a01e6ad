#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "charlab/chartable.hpp"

namespace charlab {

// Equality of character tables up to row and column permutation.  Columns may
// only be matched when their (element order, centralizer order) keys agree;
// ties are resolved by trying the admissible alignments within each tie group
// and comparing row multisets.

namespace comparedetail {

inline bool rows_match_under(const CharacterTable& a, const CharacterTable& b,
                             const std::vector<size_t>& col_map) {
  auto sorted_rows = [](std::vector<std::vector<Scalar>> rows) {
    std::sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) {
      for (size_t i = 0; i < x.size(); ++i)
        if (x[i] != y[i]) return x[i] < y[i];
      return false;
    });
    return rows;
  };
  std::vector<std::vector<Scalar>> ra, rb;
  for (const auto& ch : a.characters()) ra.push_back(ch.values);
  for (const auto& ch : b.characters()) {
    std::vector<Scalar> row(b.num_classes());
    for (size_t j = 0; j < b.num_classes(); ++j) row[j] = ch.values[col_map[j]];
    rb.push_back(std::move(row));
  }
  return sorted_rows(std::move(ra)) == sorted_rows(std::move(rb));
}

struct TieGroup {
  std::vector<size_t> a_cols;
  std::vector<size_t> b_cols;
};

inline bool try_alignments(const CharacterTable& a, const CharacterTable& b,
                           const std::vector<TieGroup>& groups, size_t gi,
                           std::vector<size_t>& col_map) {
  if (gi == groups.size()) return rows_match_under(a, b, col_map);
  std::vector<size_t> perm = groups[gi].b_cols;
  std::sort(perm.begin(), perm.end());
  do {
    for (size_t i = 0; i < perm.size(); ++i) col_map[groups[gi].a_cols[i]] = perm[i];
    if (try_alignments(a, b, groups, gi + 1, col_map)) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace comparedetail

/// True when b equals a up to a permutation of rows and a key-respecting
/// permutation of columns.
inline bool tables_equivalent(const CharacterTable& a, const CharacterTable& b) {
  if (a.group_order() != b.group_order() || a.num_classes() != b.num_classes()) return false;
  using Key = std::pair<long long, long long>;
  std::map<Key, comparedetail::TieGroup> groups_by_key;
  for (size_t j = 0; j < a.num_classes(); ++j)
    groups_by_key[{a.cls(j).element_order, a.cls(j).centralizer_order}].a_cols.push_back(j);
  for (size_t j = 0; j < b.num_classes(); ++j)
    groups_by_key[{b.cls(j).element_order, b.cls(j).centralizer_order}].b_cols.push_back(j);
  std::vector<comparedetail::TieGroup> groups;
  for (auto& [key, g] : groups_by_key) {
    (void)key;
    if (g.a_cols.size() != g.b_cols.size()) return false;
    groups.push_back(std::move(g));
  }
  // col_map[a-column] = matched b-column.
  std::vector<size_t> col_map(a.num_classes());
  return comparedetail::try_alignments(a, b, groups, 0, col_map);
}

}  // namespace charlab
