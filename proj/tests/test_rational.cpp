#include <doctest.h>

#include <random>

#include "avgorder/rational.hpp"

using namespace avgorder;

TEST_CASE("rat reduces and normalizes sign") {
  CHECK(rat(26, 12).str() == "13/6");
  CHECK(rat(3, -2).str() == "-3/2");
  CHECK(rat(-3, -2).str() == "3/2");
  CHECK(rat(211, 60).str() == "211/60");
  CHECK(rat(0, -5).str() == "0/1");
  CHECK(rat(26, 12).denominator() == 6);
  CHECK_THROWS_AS(rat(1, 0), ArithmeticError);
}

TEST_CASE("exact comparison and field operations") {
  CHECK(rat(13, 6) < rat(11, 4));
  CHECK(rat(11, 4) > rat(13, 6));
  CHECK(rat(3, 2) * rat(7, 3) == rat(7, 2));
  CHECK(rat(3, 2) * rat(7, 3) == rat(21, 6));
  CHECK(rat(211, 60) + rat(181, 120) == rat(201, 40));
  CHECK(rat(1, 2) - rat(1, 3) == rat(1, 6));
  CHECK(rat(1, 2) / rat(1, 4) == Rational(2));
  CHECK_THROWS_AS(rat(1, 2) / Rational(0), ArithmeticError);
  CHECK(abs(rat(-5, 7)) == rat(5, 7));
  CHECK(-rat(5, 7) == rat(-5, 7));
}

TEST_CASE("ceil rounds toward positive infinity") {
  CHECK(ceil(rat(7, 2)) == 4);
  CHECK(ceil(rat(-7, 2)) == -3);
  CHECK(ceil(Rational(48)) == 48);
}

TEST_CASE("parse and render") {
  CHECK(Rational::parse("13/6") == rat(13, 6));
  CHECK(Rational::parse("-4/8") == rat(-1, 2));
  CHECK(Rational::parse("17") == Rational(17));
  CHECK_THROWS_AS(Rational::parse("1/0"), ArithmeticError);
  CHECK_THROWS_AS(Rational::parse("a/2"), ArithmeticError);
  CHECK_THROWS_AS(Rational::parse("1/"), ArithmeticError);
  CHECK(rat(13, 6).decimal() == "2.16666666667");
  CHECK(Rational(17).decimal() == "17");
  CHECK(Rational(17).str() == "17/1");
}

TEST_CASE("big values stay exact past 64 bits") {
  BigInt big("340282366920938463463374607431768211456", 10);  // 2^128
  const Rational r(big + 1, big);
  CHECK(r > Rational(1));
  CHECK(r - Rational(1) == Rational(BigInt(1), big));
  CHECK(r - Rational(1) < rat(1, 1'000'000'000));
}

TEST_CASE("ring axioms and canonical form on random fractions") {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 40);
  auto draw = [&] {
    long d = den(rng);
    return rat(num(rng), rng() % 2 ? d : -d);
  };
  for (int i = 0; i < 500; ++i) {
    const Rational a = draw(), b = draw(), c = draw();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Rational(0));
    CHECK(Rational::parse(a.str()) == a);

    const long n = num(rng), d = den(rng), k = den(rng) * (rng() % 2 ? 1 : -1);
    CHECK(rat(n, d) == rat(k * n, k * d));
    CHECK(rat(n, d).str() == rat(k * n, k * d).str());
    // a/b < c/d  <=>  ad < cb for positive denominators
    const Rational x = rat(n, d), y = draw();
    CHECK((x < y) == (x.numerator() * y.denominator() < y.numerator() * x.denominator()));
  }
}
