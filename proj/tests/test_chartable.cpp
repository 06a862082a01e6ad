#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "charlab/chartable.hpp"
#include "test_util.hpp"

using namespace charlab;

namespace {

CharacterTable load_h() { return load_table_document(read_file(data_path("h648_table.txt"))); }

CharacterTable trivial_table() {
  return load_table_document(
      "group_order 1\n"
      "class C1 order=1 centralizer=1\n"
      "char chi1 1\n");
}

ClassFunction chi(const CharacterTable& t, const std::string& name) {
  return ClassFunction::character(t, t.char_index(name));
}

}  // namespace

TEST_CASE("table one loads with the expected shape") {
  CharacterTable h = load_h();
  CHECK(h.group_order() == 648);
  CHECK(h.num_classes() == 14);
  CHECK(h.cls(h.class_index("C6")).centralizer_order == 54);
  CHECK(h.class_size(h.class_index("C7")) == 72);
  CHECK(h.chr(h.char_index("psi8")).values[12] == Scalar::sqrt3());
}

TEST_CASE("trivial table loads") {
  CharacterTable t = trivial_table();
  CHECK(t.group_order() == 1);
  CHECK(t.num_classes() == 1);
}

TEST_CASE("structural errors at load") {
  // centralizer order 7 does not divide 648
  CHECK_THROWS_AS(load_table_document("group_order 648\n"
                                      "class C1 order=1 centralizer=648\n"
                                      "class C2 order=2 centralizer=7\n"
                                      "char a 1 1\nchar b 1 -1\n"),
                  StructureError);
  // class/character count mismatch
  CHECK_THROWS_AS(load_table_document("group_order 2\n"
                                      "class C1 order=1 centralizer=2\n"
                                      "class C2 order=2 centralizer=2\n"
                                      "char a 1 1\n"),
                  StructureError);
  // class sizes must sum to the group order
  CHECK_THROWS_AS(load_table_document("group_order 4\n"
                                      "class C1 order=1 centralizer=4\n"
                                      "class C2 order=2 centralizer=4\n"
                                      "char a 1 1\nchar b 1 -1\n"),
                  StructureError);
  // malformed syntax
  CHECK_THROWS_AS(load_table_document("group_order x\n"), ParseError);
  CHECK_THROWS_AS(load_table_document("bogus 1\n"), ParseError);
}

TEST_CASE("document round-trip") {
  CharacterTable h = load_h();
  CharacterTable again = load_table_document(render_table_document(h));
  REQUIRE(again.num_classes() == h.num_classes());
  for (size_t i = 0; i < h.num_classes(); ++i) {
    CHECK(again.chr(i).values == h.chr(i).values);
    CHECK(again.cls(i).centralizer_order == h.cls(i).centralizer_order);
  }
}

TEST_CASE("inner products over H") {
  CharacterTable h = load_h();
  CHECK(inner_product(chi(h, "psi1"), chi(h, "psi1")) == Scalar(1));
  CHECK(inner_product(chi(h, "psi10"), chi(h, "psi11")) == Scalar(0));
  ClassFunction lambda1 = chi(h, "psi1") + chi(h, "psi2") - chi(h, "psi3");
  CHECK(inner_product(lambda1, lambda1) == Scalar(3));
}

TEST_CASE("mixing tables is a hard error") {
  CharacterTable h = load_h();
  CharacterTable h2 = load_h();
  CHECK_THROWS_AS(inner_product(chi(h, "psi1"), chi(h2, "psi1")), TableMismatch);
}

TEST_CASE("orthogonality validation") {
  CharacterTable h = load_h();
  CHECK(validate_orthogonality(h).ok());
  CHECK(validate_orthogonality(trivial_table()).ok());

  // Perturb psi10 at C4 from -4 to 4: report must be non-empty.
  std::string doc = read_file(data_path("h648_table.txt"));
  auto pos = doc.find("char psi10   8  0  0 -4");
  REQUIRE(pos != std::string::npos);
  doc.replace(doc.find("-4", pos), 2, " 4");
  CharacterTable bad = load_table_document(doc);
  ValidationReport rep = validate_orthogonality(bad);
  CHECK_FALSE(rep.ok());
  CHECK_FALSE(rep.row_failures.empty());
}

TEST_CASE("structure constants from the table") {
  CharacterTable h = load_h();
  size_t x6 = h.class_index("C6"), x7 = h.class_index("C7");
  CHECK(structure_constant_a(h, x6, x7, x6) == Rational(0));
  CHECK(structure_constant_a(h, x6, x7, x7) == Rational(6));
  CHECK(structure_constant_alpha(h, x6, x7, x7) == Scalar(Rational(9, 2)));
  CHECK(structure_constant_alpha(h, x6, x7, x6) == Scalar(0));

  CharacterTable t = trivial_table();
  CHECK(structure_constant_a(t, 0, 0, 0) == Rational(1));
  CHECK(structure_constant_alpha(t, 0, 0, 0) == Scalar(1));
}

TEST_CASE("structure constants are nonnegative integers on H") {
  CharacterTable h = load_h();
  for (size_t x = 0; x < 14; ++x)
    for (size_t y = 0; y < 14; ++y)
      for (size_t z = 0; z < 14; ++z) {
        Rational a = structure_constant_a(h, x, y, z);
        REQUIRE(a.is_integer());
        REQUIRE(a.sign() >= 0);
      }
}

TEST_CASE("frobenius counting") {
  CharacterTable h = load_h();
  // Elements of order dividing 81 in H: orders 1, 3, 9.
  // 1 + 6 + 8 + 12 + 72 + 72 + 72 = 243, divisible by gcd(81, 648) = 81.
  CHECK(frobenius_count(h, 81) == 243);
  CHECK(243 % 81 == 0);
  CHECK(frobenius_count(h, 1) == 1);
  CHECK(frobenius_count(trivial_table(), 12) == 1);

  // Frobenius divisibility across several m on H.
  for (long long m : {2, 3, 4, 6, 8, 9, 12, 18, 24, 27, 36, 81, 648}) {
    long long g = std::gcd(m, h.group_order());
    CHECK(frobenius_count(h, m) % g == 0);
  }
}

TEST_CASE("degree congruences mod p") {
  Congruence c = mod_p_degree_congruence("d", Scalar(1), 3);
  CHECK(c.residue == 1);
  CHECK(c.modulus == 3);
  CHECK(c.str() == "d == 1 (mod 3)");
  CHECK(mod_p_degree_congruence("d", Scalar(-3), 3).residue == 0);
  CHECK(mod_p_degree_congruence("d", Scalar(1), 5).residue == 1);
  CHECK_THROWS_AS(mod_p_degree_congruence("d", Scalar::sqrt3(), 3), NonIntegerValue);
}
