#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "charlab/permgroup.hpp"
#include "test_util.hpp"

using namespace charlab;

namespace {

PermGroup h_group() {
  GeneratorFile gf = parse_generator_file(read_file(data_path("h648_generators.txt")));
  return PermGroup::generate(gf.degree, gf.generators);
}

}  // namespace

TEST_CASE("permutation parsing and printing") {
  Perm p = parse_perm("(1,4)(2,5,3,6)", 6);
  CHECK(p.img[0] == 3);
  CHECK(p.img[1] == 4);
  CHECK(p.str() == "(1,4)(2,5,3,6)");
  CHECK(parse_perm("()", 4).is_identity());
  CHECK(parse_perm("(1,2,3)", 3).order() == 3);
  CHECK_THROWS_AS(parse_perm("(1,7)", 6), ParseError);
  CHECK_THROWS_AS(parse_perm("(1,2)(2,3)", 3), ParseError);
  CHECK_THROWS_AS(parse_perm("(1,2", 3), ParseError);
}

TEST_CASE("closure from generators") {
  CHECK(PermGroup::generate(1, {}).order() == 1);
  CHECK(PermGroup::generate(3, {parse_perm("(1,2,3)", 3)}).order() == 3);
  CHECK(PermGroup::generate(4, {parse_perm("(1,2)", 4), parse_perm("(1,2,3,4)", 4)}).order() == 24);
  CHECK_THROWS_AS(PermGroup::generate(4, {parse_perm("(1,2,3,4)", 4)}, 3), CapExceeded);
}

TEST_CASE("H regenerates with order 648 and 14 classes") {
  PermGroup h = h_group();
  REQUIRE(h.order() == 648);
  REQUIRE(h.classes().size() == 14);

  // (element order, centralizer order) multiset must match the shipped table.
  std::multiset<std::pair<long long, long long>> got, want = {
      {1, 648}, {2, 24}, {2, 12}, {3, 108}, {3, 81}, {3, 54}, {3, 9},
      {4, 12},  {6, 12}, {6, 6},  {9, 9},   {9, 9},  {12, 12}, {12, 12}};
  for (const auto& c : h.classes()) got.insert({c.element_order, c.centralizer_order});
  CHECK(got == want);

  // Canonical class order sorts by element order, then centralizer desc.
  CHECK(h.classes()[0].element_order == 1);
  CHECK(h.classes()[3].centralizer_order == 108);
  CHECK(h.classes()[6].centralizer_order == 9);
}

TEST_CASE("class equation") {
  PermGroup h = h_group();
  long long sum = 0;
  for (const auto& c : h.classes()) sum += c.size;
  CHECK(sum == h.order());
}

TEST_CASE("two classes of a transposition group") {
  PermGroup g = PermGroup::generate(2, {parse_perm("(1,2)", 2)});
  REQUIRE(g.classes().size() == 2);
  CHECK(g.classes()[0].size == 1);
  CHECK(g.classes()[1].size == 1);
}

TEST_CASE("brute-force structure constants on H") {
  PermGroup h = h_group();
  // Classes are canonically ordered, so C6 is index 5 and C7 index 6.
  int x6 = 5, x7 = 6;
  REQUIRE(h.classes()[x6].centralizer_order == 54);
  REQUIRE(h.classes()[x7].centralizer_order == 9);
  CHECK(h.structure_constant_bruteforce(x6, x7, x6) == 0);
  CHECK(h.structure_constant_bruteforce(x6, x7, x7) == 6);

  PermGroup t = PermGroup::generate(1, {});
  CHECK(t.structure_constant_bruteforce(0, 0, 0) == 1);
}

TEST_CASE("bulk structure constants agree with fixed-representative counts") {
  PermGroup s4 = PermGroup::generate(4, {parse_perm("(1,2)", 4), parse_perm("(1,2,3,4)", 4)});
  auto all = s4.all_structure_constants();
  size_t r = s4.classes().size();
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j)
      for (size_t k = 0; k < r; ++k)
        REQUIRE(all[i][j][k] ==
                s4.structure_constant_bruteforce(static_cast<int>(i), static_cast<int>(j),
                                                 static_cast<int>(k)));
}

TEST_CASE("direct count of 81st roots of identity in H") {
  PermGroup h = h_group();
  CHECK(h.count_mth_roots_of_identity(81) == 243);
  CHECK(243 % 81 == 0);
  CHECK(h.exponent() == 36);
}
