#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "charlab/dixon.hpp"
#include "charlab/table_compare.hpp"
#include "test_util.hpp"

using namespace charlab;

namespace {

PermGroup from_cycles(int degree, std::initializer_list<const char*> gens) {
  std::vector<Perm> ps;
  for (const char* g : gens) ps.push_back(parse_perm(g, degree));
  return PermGroup::generate(degree, ps);
}

}  // namespace

TEST_CASE("dixon on the trivial group") {
  PermGroup t = PermGroup::generate(1, {});
  CharacterTable ct = dixon_character_table(t);
  CHECK(ct.num_classes() == 1);
  CHECK(ct.chr(0).values[0] == Scalar(1));
}

TEST_CASE("dixon on C2") {
  CharacterTable ct = dixon_character_table(from_cycles(2, {"(1,2)"}));
  REQUIRE(ct.num_classes() == 2);
  CHECK(validate_orthogonality(ct).ok());
}

TEST_CASE("dixon rejects values outside the ring") {
  // C3 has primitive cube roots of unity among its values.
  CHECK_THROWS_AS(dixon_character_table(from_cycles(3, {"(1,2,3)"})), ValueOutsideRing);
}

TEST_CASE("dixon on S3 and S4") {
  CharacterTable s3 = dixon_character_table(from_cycles(3, {"(1,2)", "(1,2,3)"}));
  REQUIRE(s3.num_classes() == 3);
  std::multiset<long long> degrees;
  for (const auto& ch : s3.characters()) degrees.insert((long long)ch.values[0].rat.num());
  CHECK(degrees == std::multiset<long long>{1, 1, 2});

  CharacterTable s4 = dixon_character_table(from_cycles(4, {"(1,2)", "(1,2,3,4)"}));
  REQUIRE(s4.num_classes() == 5);
  degrees.clear();
  for (const auto& ch : s4.characters()) degrees.insert((long long)ch.values[0].rat.num());
  CHECK(degrees == std::multiset<long long>{1, 1, 2, 3, 3});
  CHECK(validate_orthogonality(s4).ok());
}

TEST_CASE("dixon on a group with order-12 elements matches sqrt-3 values") {
  // C12 = <(1..12)> has characters with values in Q(zeta_12); the ring gate
  // must reject it (zeta_12 itself is not in Q(sqrt 3)).
  std::string c12 = "(1,2,3,4,5,6,7,8,9,10,11,12)";
  CHECK_THROWS_AS(dixon_character_table(from_cycles(12, {c12.c_str()})), ValueOutsideRing);
}

TEST_CASE("dixon table of H equals the shipped table up to permutation") {
  GeneratorFile gf = parse_generator_file(read_file(data_path("h648_generators.txt")));
  PermGroup h = PermGroup::generate(gf.degree, gf.generators);
  CharacterTable dixon = dixon_character_table(h);
  CHECK(validate_orthogonality(dixon).ok());

  std::multiset<long long> degrees;
  for (const auto& ch : dixon.characters()) degrees.insert((long long)ch.values[0].rat.num());
  CHECK(degrees == std::multiset<long long>{1, 1, 2, 3, 3, 6, 6, 6, 6, 8, 8, 8, 12, 12});

  CharacterTable shipped = load_table_document(read_file(data_path("h648_table.txt")));
  CHECK(tables_equivalent(dixon, shipped));

  // Degree identity.
  Scalar deg2;
  for (const auto& ch : dixon.characters()) deg2 += ch.values[0] * ch.values[0];
  CHECK(deg2 == Scalar(648));
}

TEST_CASE("frobenius divisibility on dixon tables of small groups") {
  auto check_frobenius = [](const PermGroup& g) {
    CharacterTable t = dixon_character_table(g);
    for (long long m = 1; m <= 2 * g.order(); ++m) {
      long long count = frobenius_count(t, m);
      long long gcd_m = std::gcd(m, g.order());
      REQUIRE(count % gcd_m == 0);
      // The table-driven count must agree with direct group enumeration.
      REQUIRE(count == g.count_mth_roots_of_identity(m));
    }
  };
  check_frobenius(from_cycles(3, {"(1,2)", "(1,2,3)"}));                 // S3
  check_frobenius(from_cycles(4, {"(1,2)", "(1,2,3,4)"}));               // S4
  check_frobenius(from_cycles(4, {"(1,2,3,4)", "(1,3)"}));               // D4
  check_frobenius(from_cycles(2, {"(1,2)"}));                            // C2
}

TEST_CASE("tables_equivalent detects differences") {
  CharacterTable s3 = dixon_character_table(from_cycles(3, {"(1,2)", "(1,2,3)"}));
  CharacterTable s3b = dixon_character_table(from_cycles(3, {"(1,3)", "(1,2,3)"}));
  CHECK(tables_equivalent(s3, s3b));
  CharacterTable c2 = dixon_character_table(from_cycles(2, {"(1,2)"}));
  CHECK_FALSE(tables_equivalent(s3, c2));
}
