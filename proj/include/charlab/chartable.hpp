#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "charlab/errors.hpp"
#include "charlab/matrix.hpp"
#include "charlab/scalar.hpp"
#include "charlab/scalar_io.hpp"

namespace charlab {

struct ConjClass {
  std::string name;
  long long element_order = 1;
  long long centralizer_order = 1;
};

struct Character {
  std::string name;
  std::vector<Scalar> values;  // one per class, identity class first
};

/// A complete ordinary character table.  Structural invariants (class sizes,
/// degree integrality, counts) are enforced at construction; orthogonality is
/// a separate, explicit validation step.
class CharacterTable {
 public:
  CharacterTable(long long group_order, std::vector<ConjClass> classes,
                 std::vector<Character> characters)
      : group_order_(group_order), classes_(std::move(classes)), chars_(std::move(characters)) {
    if (group_order_ <= 0) throw StructureError("group order must be positive");
    if (classes_.empty()) throw StructureError("table needs at least one class");
    if (chars_.size() != classes_.size())
      throw StructureError("character count differs from class count");
    if (classes_[0].element_order != 1 || classes_[0].centralizer_order != group_order_)
      throw StructureError("first class must be the identity class");
    long long size_sum = 0;
    for (const auto& c : classes_) {
      if (c.centralizer_order <= 0 || group_order_ % c.centralizer_order != 0)
        throw StructureError("centralizer order " + std::to_string(c.centralizer_order) +
                             " does not divide the group order");
      size_sum += group_order_ / c.centralizer_order;
      if (!class_index_.emplace(c.name, class_index_.size()).second)
        throw StructureError("duplicate class name " + c.name);
    }
    if (size_sum != group_order_)
      throw StructureError("class sizes sum to " + std::to_string(size_sum) +
                           ", expected the group order");
    for (const auto& ch : chars_) {
      if (ch.values.size() != classes_.size())
        throw StructureError("character " + ch.name + " has wrong value count");
      if (!(ch.values[0].is_rational_integer() && ch.values[0].rat.sign() > 0))
        throw StructureError("degree of " + ch.name + " is not a positive integer");
      if (!char_index_.emplace(ch.name, char_index_.size()).second)
        throw StructureError("duplicate character name " + ch.name);
    }
  }

  long long group_order() const { return group_order_; }
  size_t num_classes() const { return classes_.size(); }
  const std::vector<ConjClass>& classes() const { return classes_; }
  const std::vector<Character>& characters() const { return chars_; }
  const ConjClass& cls(size_t k) const { return classes_.at(k); }
  const Character& chr(size_t i) const { return chars_.at(i); }
  long long class_size(size_t k) const { return group_order_ / classes_.at(k).centralizer_order; }

  size_t class_index(const std::string& name) const {
    auto it = class_index_.find(name);
    if (it == class_index_.end()) throw StructureError("unknown class " + name);
    return it->second;
  }
  size_t char_index(const std::string& name) const {
    auto it = char_index_.find(name);
    if (it == char_index_.end()) throw StructureError("unknown character " + name);
    return it->second;
  }

 private:
  long long group_order_;
  std::vector<ConjClass> classes_;
  std::vector<Character> chars_;
  std::map<std::string, size_t> class_index_;
  std::map<std::string, size_t> char_index_;
};

/// A class function bound to the identity of one table; mixing tables in any
/// binary operation is a hard error.
struct ClassFunction {
  const CharacterTable* table = nullptr;
  std::vector<Scalar> values;

  ClassFunction() = default;
  ClassFunction(const CharacterTable& t, std::vector<Scalar> v) : table(&t), values(std::move(v)) {
    if (values.size() != t.num_classes()) throw DimensionMismatch("class function has wrong length");
  }

  static ClassFunction zero(const CharacterTable& t) {
    return ClassFunction(t, std::vector<Scalar>(t.num_classes()));
  }
  static ClassFunction character(const CharacterTable& t, size_t i) {
    return ClassFunction(t, t.chr(i).values);
  }

  ClassFunction& operator+=(const ClassFunction& o) {
    require_same(o);
    for (size_t k = 0; k < values.size(); ++k) values[k] += o.values[k];
    return *this;
  }
  ClassFunction& operator-=(const ClassFunction& o) {
    require_same(o);
    for (size_t k = 0; k < values.size(); ++k) values[k] -= o.values[k];
    return *this;
  }
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  friend ClassFunction operator*(const Scalar& c, ClassFunction f) {
    for (auto& v : f.values) v *= c;
    return f;
  }

  void require_same(const ClassFunction& o) const {
    if (table != o.table) throw TableMismatch("class functions over different tables");
  }
};

/// (f, g) = sum_k f(x_k) g(x_k) / |C(x_k)|.  All values in scope are real, so
/// conjugation is the identity.
inline Scalar inner_product(const ClassFunction& f, const ClassFunction& g) {
  f.require_same(g);
  Scalar acc;
  for (size_t k = 0; k < f.values.size(); ++k) {
    Scalar term = f.values[k] * g.values[k];
    if (!term.is_zero()) acc += term * Scalar(Rational(1, f.table->cls(k).centralizer_order));
  }
  return acc;
}

struct ValidationReport {
  std::vector<std::pair<size_t, size_t>> row_failures;  // first orthogonality (i <= j)
  std::vector<std::pair<size_t, size_t>> col_failures;  // second orthogonality (k <= l)
  bool degree_identity = false;                         // sum of squared degrees == |G|

  bool ok() const { return row_failures.empty() && col_failures.empty() && degree_identity; }
};

inline ValidationReport validate_orthogonality(const CharacterTable& t) {
  ValidationReport rep;
  size_t n = t.num_classes();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j) {
      Scalar ip = inner_product(ClassFunction::character(t, i), ClassFunction::character(t, j));
      Scalar expect = (i == j) ? Scalar(1) : Scalar(0);
      if (ip != expect) rep.row_failures.emplace_back(i, j);
    }
  for (size_t k = 0; k < n; ++k)
    for (size_t l = k; l < n; ++l) {
      Scalar s;
      for (size_t i = 0; i < n; ++i) s += t.chr(i).values[k] * t.chr(i).values[l];
      Scalar expect = (k == l) ? Scalar(t.cls(k).centralizer_order) : Scalar(0);
      if (s != expect) rep.col_failures.emplace_back(k, l);
    }
  Scalar deg2;
  for (size_t i = 0; i < n; ++i) deg2 += t.chr(i).values[0] * t.chr(i).values[0];
  rep.degree_identity = (deg2 == Scalar(t.group_order()));
  return rep;
}

/// alpha_{xyz} = sum_chi chi(x) chi(y) chi(z) / chi(1)   (real values).
inline Scalar structure_constant_alpha(const CharacterTable& t, size_t x, size_t y, size_t z) {
  Scalar acc;
  for (size_t i = 0; i < t.num_classes(); ++i) {
    const auto& v = t.chr(i).values;
    Scalar num = v[x] * v[y] * v[z];
    if (!num.is_zero()) acc += num * v[0].inverse();
  }
  return acc;
}

/// a_{xyz} = |F| / (|C(x)| |C(y)|) * alpha_{xyz}: the number of pairs
/// (a, b) in class x times class y with a b = z (z a fixed representative).
inline Rational structure_constant_a(const CharacterTable& t, size_t x, size_t y, size_t z) {
  Scalar alpha = structure_constant_alpha(t, x, y, z);
  Scalar a = alpha * Scalar(Rational(t.group_order(),
                                     t.cls(x).centralizer_order * t.cls(y).centralizer_order));
  if (!a.is_rational()) throw NonIntegerValue("structure constant outside Q");
  return a.rat;
}

/// 1 + sum of sizes of non-identity classes whose element order divides m.
/// Frobenius: the result is divisible by gcd(m, |G|) on genuine tables.
inline long long frobenius_count(const CharacterTable& t, long long m) {
  long long count = 1;
  for (size_t k = 1; k < t.num_classes(); ++k)
    if (m % t.cls(k).element_order == 0) count += t.class_size(k);
  return count;
}

struct Congruence {
  std::string symbol;
  BigInt residue;
  BigInt modulus;

  std::string str() const {
    return symbol + " == " + residue.str() + " (mod " + modulus.str() + ")";
  }
};

/// chi(g) == chi(1) mod p for a p-element g with integral chi(g): returns the
/// congruence constraint on the degree.
inline Congruence mod_p_degree_congruence(const std::string& degree_symbol, const Scalar& value,
                                          long long p) {
  BigInt v = value.to_integer();  // throws NonIntegerValue
  BigInt r = v % p;
  if (r < 0) r += p;
  return Congruence{degree_symbol, r, BigInt(p)};
}

// --- Partial column data -------------------------------------------------

/// A few columns of an otherwise unknown character table: class labels with
/// centralizer/element orders, rows of known values, and symbolic degrees.
struct PartialColumnSet {
  std::string table_of;  // ambient group identifier
  std::vector<ConjClass> class_labels;
  std::vector<std::pair<std::string, std::vector<Scalar>>> rows;
  std::vector<std::string> unknown_degrees;
};

// --- Document format ------------------------------------------------------
//
//   group_order 648
//   class C1 order=1 centralizer=648
//   ...
//   char psi1  1 1 1 1 ...
//
// Values use the textual scalar syntax; '#' starts a comment.

namespace detail {

inline std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

inline std::string strip_comment(std::string line) {
  auto pos = line.find('#');
  if (pos != std::string::npos) line.erase(pos);
  return line;
}

inline long long parse_ll(const std::string& s, const std::string& what) {
  try {
    size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError("bad integer for " + what + ": '" + s + "'");
  }
}

inline long long parse_kv(const std::string& tok, const std::string& key) {
  if (tok.rfind(key + "=", 0) != 0) throw ParseError("expected " + key + "=..., got '" + tok + "'");
  return parse_ll(tok.substr(key.size() + 1), key);
}

}  // namespace detail

inline CharacterTable load_table_document(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::optional<long long> group_order;
  std::vector<ConjClass> classes;
  std::vector<Character> chars;
  while (std::getline(in, line)) {
    auto toks = detail::split_ws(detail::strip_comment(line));
    if (toks.empty()) continue;
    if (toks[0] == "group_order") {
      if (toks.size() != 2) throw ParseError("group_order needs one value");
      group_order = detail::parse_ll(toks[1], "group_order");
    } else if (toks[0] == "class") {
      if (toks.size() != 4) throw ParseError("class line needs: name order=.. centralizer=..");
      ConjClass c;
      c.name = toks[1];
      c.element_order = detail::parse_kv(toks[2], "order");
      c.centralizer_order = detail::parse_kv(toks[3], "centralizer");
      classes.push_back(std::move(c));
    } else if (toks[0] == "char") {
      if (toks.size() < 3) throw ParseError("char line needs a name and values");
      Character ch;
      ch.name = toks[1];
      for (size_t i = 2; i < toks.size(); ++i) ch.values.push_back(parse_scalar(toks[i]));
      chars.push_back(std::move(ch));
    } else {
      throw ParseError("unknown directive '" + toks[0] + "' in table document");
    }
  }
  if (!group_order) throw ParseError("table document is missing group_order");
  return CharacterTable(*group_order, std::move(classes), std::move(chars));
}

inline std::string render_table_document(const CharacterTable& t) {
  std::ostringstream os;
  os << "group_order " << t.group_order() << "\n";
  for (const auto& c : t.classes())
    os << "class " << c.name << " order=" << c.element_order
       << " centralizer=" << c.centralizer_order << "\n";
  for (const auto& ch : t.characters()) {
    os << "char " << ch.name << " ";
    for (const auto& v : ch.values) os << " " << render_scalar(v);
    os << "\n";
  }
  return os.str();
}

}  // namespace charlab
