#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "charlab/rational.hpp"
#include "charlab/scalar.hpp"
#include "charlab/scalar_io.hpp"

using namespace charlab;

namespace {

Scalar random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<long long> num(-50, 50);
  std::uniform_int_distribution<long long> den(1, 12);
  return Scalar(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
}

}  // namespace

TEST_CASE("rational arithmetic basics") {
  CHECK(Rational(1, 12) + Rational(1, 36) == Rational(1, 9));
  CHECK(Rational(7, 81).den() == 81);
  CHECK(Rational(-4, 2) == Rational(-2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(2, -4).den() == 2);
  CHECK(Rational(5, 3).floor() == 1);
  CHECK(Rational(-5, 3).floor() == -2);
  CHECK_THROWS_AS(Rational(1, 0), ZeroInverse);
  CHECK_THROWS_AS(Rational(1, 2) / Rational(0), ZeroInverse);
}

TEST_CASE("scalar ring arithmetic") {
  Scalar r3 = Scalar::sqrt3();
  CHECK(r3 * r3 == Scalar(3));
  CHECK((Scalar(1) + r3) * (Scalar(1) - r3) == Scalar(-2));
  CHECK(Scalar(Rational(1, 12)) + Scalar(Rational(1, 36)) == Scalar(Rational(1, 9)));
}

TEST_CASE("scalar inverse") {
  CHECK(Scalar(2).inverse() == Scalar(Rational(1, 2)));
  CHECK(Scalar::sqrt3().inverse() == Scalar(Rational(0), Rational(1, 3)));
  // 1/(1 + r3) = (-1 + r3)/2, checked by direct multiplication
  Scalar x = Scalar(1) + Scalar::sqrt3();
  Scalar inv = x.inverse();
  CHECK(inv == Scalar(Rational(-1, 2), Rational(1, 2)));
  CHECK(x * inv == Scalar(1));
  CHECK_THROWS_AS(Scalar(0).inverse(), ZeroInverse);
}

TEST_CASE("scalar integer recognition") {
  CHECK(Scalar(-4).is_rational_integer());
  CHECK_FALSE(Scalar::sqrt3().is_rational_integer());
  CHECK_FALSE(Scalar(Rational(7, 81)).is_rational_integer());
}

TEST_CASE("scalar exact sign") {
  CHECK(Scalar(Rational(-1), Rational(1)).sign() > 0);   // -1 + r3 > 0
  CHECK(Scalar(Rational(2), Rational(-1)).sign() > 0);   // 2 - r3 > 0
  CHECK(Scalar(Rational(-2), Rational(1)).sign() < 0);   // -2 + r3 < 0
  CHECK(Scalar(Rational(0), Rational(-3)).sign() < 0);
  CHECK(Scalar(0).sign() == 0);
}

TEST_CASE("scalar parsing") {
  CHECK(parse_scalar("-4") == Scalar(-4));
  CHECK(parse_scalar("7/81") == Scalar(Rational(7, 81)));
  CHECK(parse_scalar("r3") == Scalar::sqrt3());
  CHECK(parse_scalar("1+2r3") == Scalar(Rational(1), Rational(2)));
  CHECK(parse_scalar("-r3/12") == Scalar(Rational(0), Rational(-1, 12)));
  CHECK(parse_scalar("(3+r3)/12") == Scalar(Rational(1, 4), Rational(1, 12)));
  CHECK(parse_scalar(" ( 3 + r3 ) / 12 ") == Scalar(Rational(1, 4), Rational(1, 12)));
  CHECK(parse_scalar("(-3-r3)/12") == Scalar(Rational(-1, 4), Rational(-1, 12)));
  CHECK(parse_scalar("2r3/3") == Scalar(Rational(0), Rational(2, 3)));
  CHECK_THROWS_AS(parse_scalar(""), ParseError);
  CHECK_THROWS_AS(parse_scalar("1+"), ParseError);
  CHECK_THROWS_AS(parse_scalar("r4"), ParseError);
  CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
  CHECK_THROWS_AS(parse_scalar("(1+r3)/"), ParseError);
  CHECK_THROWS_AS(parse_scalar("3 4"), ParseError);
}

TEST_CASE("scalar render round-trip on specific forms") {
  for (const char* text : {"0", "-4", "7/81", "r3", "-r3", "2r3", "-r3/12", "5r3/12", "1+2r3",
                           "1-r3", "(3+r3)/12", "(-3+2r3)/7"}) {
    Scalar v = parse_scalar(text);
    CHECK(render_scalar(v) == text);
    CHECK(parse_scalar(render_scalar(v)) == v);
  }
}

TEST_CASE("scalar field axioms and round-trip, randomized") {
  std::mt19937 rng(20240811);
  int cases = 10000;
  for (int i = 0; i < cases; ++i) {
    Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a + b == b + a);
    REQUIRE(a * b == b * a);
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a + (-a) == Scalar(0));
    if (!a.is_zero()) REQUIRE(a * a.inverse() == Scalar(1));
    REQUIRE(parse_scalar(render_scalar(a)) == a);
  }
}

TEST_CASE("representation uniqueness") {
  // 1 and r3 are linearly independent over Q: equal scalars have equal parts.
  Scalar a(Rational(1, 2), Rational(3, 4));
  Scalar b(Rational(1, 2), Rational(3, 4));
  CHECK(a == b);
  CHECK(Scalar(Rational(1), Rational(0)) != Scalar(Rational(0), Rational(1)));
}
