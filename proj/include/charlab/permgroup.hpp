#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <deque>
#include <numeric>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "charlab/errors.hpp"

namespace charlab {

/// Permutation on {1..n}, stored as 0-based image vector.
struct Perm {
  std::vector<int> img;

  Perm() = default;
  explicit Perm(int degree) : img(degree) { std::iota(img.begin(), img.end(), 0); }
  explicit Perm(std::vector<int> images) : img(std::move(images)) {
    std::vector<bool> seen(img.size(), false);
    for (int v : img) {
      if (v < 0 || v >= static_cast<int>(img.size()) || seen[v])
        throw StructureError("image vector is not a permutation");
      seen[v] = true;
    }
  }

  int degree() const { return static_cast<int>(img.size()); }
  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (img[i] != i) return false;
    return true;
  }

  /// (a * b)(x) = a(b(x))
  friend Perm operator*(const Perm& a, const Perm& b) {
    if (a.degree() != b.degree()) throw DimensionMismatch("permutation degrees differ");
    Perm r;
    r.img.resize(a.img.size());
    for (size_t i = 0; i < a.img.size(); ++i) r.img[i] = a.img[b.img[i]];
    return r;
  }

  Perm inverse() const {
    Perm r;
    r.img.resize(img.size());
    for (size_t i = 0; i < img.size(); ++i) r.img[img[i]] = static_cast<int>(i);
    return r;
  }

  long long order() const {
    Perm p = *this;
    long long n = 1;
    while (!p.is_identity()) {
      p = p * *this;
      ++n;
    }
    return n;
  }

  friend bool operator==(const Perm& a, const Perm& b) { return a.img == b.img; }
  friend bool operator<(const Perm& a, const Perm& b) { return a.img < b.img; }

  /// Cycle notation, points 1-based.
  std::string str() const {
    std::string out;
    std::vector<bool> seen(img.size(), false);
    for (size_t i = 0; i < img.size(); ++i) {
      if (seen[i] || img[i] == static_cast<int>(i)) continue;
      out += "(";
      size_t j = i;
      bool first = true;
      do {
        if (!first) out += ",";
        out += std::to_string(j + 1);
        seen[j] = true;
        j = img[j];
        first = false;
      } while (j != i);
      out += ")";
    }
    return out.empty() ? "()" : out;
  }
};

struct PermHash {
  size_t operator()(const Perm& p) const {
    size_t h = 1469598103934665603ull;
    for (int v : p.img) {
      h ^= static_cast<size_t>(v) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// Parses one permutation in cycle notation, e.g. "(1,4)(2,5,3,6)" or "()".
inline Perm parse_perm(const std::string& text, int degree) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  size_t pos = 0;
  auto skip = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
  skip();
  while (pos < text.size()) {
    if (text[pos] != '(') throw ParseError("expected '(' in permutation: " + text);
    ++pos;
    std::vector<int> cycle;
    skip();
    while (pos < text.size() && text[pos] != ')') {
      size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == start) throw ParseError("expected point number in permutation: " + text);
      int pt = std::stoi(text.substr(start, pos - start));
      if (pt < 1 || pt > degree) throw ParseError("point out of range in permutation: " + text);
      cycle.push_back(pt - 1);
      skip();
      if (pos < text.size() && text[pos] == ',') { ++pos; skip(); }
    }
    if (pos >= text.size()) throw ParseError("unterminated cycle in permutation: " + text);
    ++pos;  // ')'
    for (size_t i = 0; i < cycle.size(); ++i) {
      int from = cycle[i], to = cycle[(i + 1) % cycle.size()];
      if (img[from] != from) throw ParseError("point repeated across cycles: " + text);
      img[from] = to;
    }
    skip();
  }
  return Perm(std::move(img));
}

/// Generators file: optional "degree N" line, then one permutation per line.
/// Without a degree line the degree is the largest point mentioned.
struct GeneratorFile {
  int degree = 1;
  std::vector<Perm> generators;
};

inline GeneratorFile parse_generator_file(const std::string& text) {
  std::vector<std::string> perm_lines;
  int degree = 0;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto pos = line.find('#');
    if (pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "degree") {
      long long d = 0;
      if (!(ls >> d) || d < 1) throw ParseError("bad degree line in generators file");
      degree = static_cast<int>(d);
    } else {
      std::string rest = head;
      std::string more;
      while (ls >> more) rest += more;
      perm_lines.push_back(rest);
    }
  }
  if (degree == 0) {
    for (const auto& pl : perm_lines)
      for (size_t i = 0; i < pl.size();) {
        if (std::isdigit(static_cast<unsigned char>(pl[i]))) {
          size_t j = i;
          while (j < pl.size() && std::isdigit(static_cast<unsigned char>(pl[j]))) ++j;
          degree = std::max(degree, std::stoi(pl.substr(i, j - i)));
          i = j;
        } else {
          ++i;
        }
      }
    if (degree == 0) degree = 1;
  }
  GeneratorFile gf;
  gf.degree = degree;
  for (const auto& pl : perm_lines) gf.generators.push_back(parse_perm(pl, degree));
  return gf;
}

/// Small permutation group with its elements fully materialized.  Everything
/// downstream (classes, structure constants, Dixon) works off the element
/// list, which is the point: this is the brute-force oracle.
class PermGroup {
 public:
  struct ClassInfo {
    int rep = 0;  // element index of the lexicographically least member
    long long size = 0;
    long long element_order = 1;
    long long centralizer_order = 1;
  };

  static PermGroup generate(int degree, const std::vector<Perm>& gens, size_t cap = 1000000) {
    PermGroup g;
    g.degree_ = degree;
    g.gens_ = gens;
    for (const auto& p : gens)
      if (p.degree() != degree) throw DimensionMismatch("generator degree mismatch");
    Perm id(degree);
    g.elements_.push_back(id);
    g.index_.emplace(id, 0);
    std::deque<int> queue{0};
    while (!queue.empty()) {
      int cur = queue.front();
      queue.pop_front();
      for (const auto& s : g.gens_) {
        Perm next = g.elements_[cur] * s;
        if (g.index_.emplace(next, g.elements_.size()).second) {
          if (g.elements_.size() >= cap)
            throw CapExceeded("group order cap " + std::to_string(cap) + " exceeded");
          g.elements_.push_back(std::move(next));
          queue.push_back(static_cast<int>(g.elements_.size()) - 1);
        }
      }
    }
    g.compute_classes();
    return g;
  }

  int degree() const { return degree_; }
  long long order() const { return static_cast<long long>(elements_.size()); }
  const std::vector<Perm>& elements() const { return elements_; }
  const Perm& element(int i) const { return elements_[i]; }
  int element_index(const Perm& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) throw StructureError("element not in group");
    return it->second;
  }
  const std::vector<ClassInfo>& classes() const { return classes_; }
  int class_of_element(int elem_index) const { return class_of_[elem_index]; }
  int inverse_class(int k) const {
    return class_of_[element_index(elements_[classes_[k].rep].inverse())];
  }

  /// Number of pairs (a, b) in class x times class y with a*b equal to the
  /// canonical representative of class z.  Deliberately naive enumeration
  /// over the full product of the two classes; this is the ground truth the
  /// character-table formula is checked against.
  long long structure_constant_bruteforce(int x, int y, int z) const {
    const Perm& target = elements_[classes_[z].rep];
    long long count = 0;
    for (int a : class_members_[x])
      for (int b : class_members_[y])
        if (elements_[a] * elements_[b] == target) ++count;
    return count;
  }

  /// a[i][j][k] for all class triples via one sweep over G x G:
  /// bucket counts of class(ab) divided by |class k|.
  std::vector<std::vector<std::vector<long long>>> all_structure_constants() const {
    size_t r = classes_.size();
    std::vector<std::vector<std::vector<long long>>> a(
        r, std::vector<std::vector<long long>>(r, std::vector<long long>(r, 0)));
    for (size_t i = 0; i < r; ++i)
      for (int ea : class_members_[i]) {
        const Perm& pa = elements_[ea];
        for (size_t b = 0; b < elements_.size(); ++b) {
          Perm prod = pa * elements_[b];
          a[i][class_of_[b]][class_of_[index_.at(prod)]]++;
        }
      }
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < r; ++j)
        for (size_t k = 0; k < r; ++k) a[i][j][k] /= classes_[k].size;
    return a;
  }

  /// Count of x in G with x^m = 1.
  long long count_mth_roots_of_identity(long long m) const {
    long long count = 0;
    for (const auto& c : classes_)
      if (m % c.element_order == 0) count += c.size;
    return count;
  }

  long long exponent() const {
    long long e = 1;
    for (const auto& c : classes_) e = std::lcm(e, c.element_order);
    return e;
  }

  const std::vector<int>& class_members(int k) const { return class_members_[k]; }

 private:
  void compute_classes() {
    size_t n = elements_.size();
    class_of_.assign(n, -1);
    std::vector<std::vector<int>> members;
    for (size_t e = 0; e < n; ++e) {
      if (class_of_[e] >= 0) continue;
      int cid = static_cast<int>(members.size());
      std::vector<int> orbit{static_cast<int>(e)};
      class_of_[e] = cid;
      for (size_t q = 0; q < orbit.size(); ++q) {
        const Perm& x = elements_[orbit[q]];
        for (const auto& s : gens_) {
          Perm conj = s.inverse() * x * s;
          int idx = index_.at(conj);
          if (class_of_[idx] < 0) {
            class_of_[idx] = cid;
            orbit.push_back(idx);
          }
        }
      }
      members.push_back(std::move(orbit));
    }
    // Canonical order: element order asc, centralizer desc (= size asc),
    // lexicographically least representative.
    std::vector<ClassInfo> infos(members.size());
    for (size_t c = 0; c < members.size(); ++c) {
      auto& m = members[c];
      std::sort(m.begin(), m.end(), [&](int a, int b) { return elements_[a] < elements_[b]; });
      infos[c].rep = m[0];
      infos[c].size = static_cast<long long>(m.size());
      infos[c].element_order = elements_[m[0]].order();
      infos[c].centralizer_order = order() / infos[c].size;
    }
    std::vector<size_t> perm(members.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](size_t a, size_t b) {
      if (infos[a].element_order != infos[b].element_order)
        return infos[a].element_order < infos[b].element_order;
      if (infos[a].centralizer_order != infos[b].centralizer_order)
        return infos[a].centralizer_order > infos[b].centralizer_order;
      return elements_[infos[a].rep] < elements_[infos[b].rep];
    });
    classes_.clear();
    class_members_.clear();
    std::vector<int> remap(members.size());
    for (size_t new_id = 0; new_id < perm.size(); ++new_id) {
      classes_.push_back(infos[perm[new_id]]);
      class_members_.push_back(std::move(members[perm[new_id]]));
      remap[perm[new_id]] = static_cast<int>(new_id);
    }
    for (auto& c : class_of_) c = remap[c];
  }

  int degree_ = 1;
  std::vector<Perm> gens_;
  std::vector<Perm> elements_;
  std::unordered_map<Perm, int, PermHash> index_;
  std::vector<ClassInfo> classes_;
  std::vector<std::vector<int>> class_members_;
  std::vector<int> class_of_;
};

}  // namespace charlab
