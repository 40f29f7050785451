#include "doctest.h"

#include <random>

#include "indexlab/exact.hpp"
#include "support/oracles.hpp"

using indexlab::BigInt;
using indexlab::ExactReal;

namespace {
const ExactReal kSqrt2Minus1 = ExactReal::make(-1, 1, 1, 2);
}

TEST_CASE("make normalizes sign, gcd and perfect squares") {
  CHECK(kSqrt2Minus1.is_irrational());
  CHECK(kSqrt2Minus1.to_string() == "(-1+1*sqrt(2))/1");
  CHECK(std::abs(kSqrt2Minus1.to_double() - 0.41421356) < 1e-7);

  const auto half = ExactReal::make(2, 0, 4, 0);
  CHECK(half.is_rational());
  CHECK(half == ExactReal::rational(1, 2));

  const auto two = ExactReal::make(0, 2, 2, 4);
  CHECK(two.is_rational());
  CHECK(two == ExactReal(2));
  CHECK(oracle::decimal(two) == oracle::decimal(ExactReal(2)));

  const auto neg_den = ExactReal::make(1, 1, -3, 5);
  CHECK(neg_den.c() == 3);
  CHECK(neg_den.a() == -1);
  CHECK(neg_den.b() == -1);

  // sqrt(8) = 2*sqrt(2): square factors move into b.
  CHECK(ExactReal::make(0, 1, 1, 8) == ExactReal::make(0, 2, 1, 2));
  CHECK(ExactReal::make(0, 0, 5, 7).radicand() == 0);
}

TEST_CASE("make rejects a zero denominator and negative radicands") {
  CHECK_THROWS_AS(ExactReal::make(1, 1, 0, 2), indexlab::DivisionByZero);
  CHECK_THROWS_AS(ExactReal::make(1, 1, 1, -2), indexlab::UnsupportedField);
}

TEST_CASE("irrationality flag") {
  CHECK(indexlab::is_irrational(kSqrt2Minus1));
  CHECK_FALSE(indexlab::is_irrational(ExactReal::rational(1, 2)));
  CHECK_FALSE(indexlab::is_irrational(ExactReal::make(0, 3, 1, 9)));
  CHECK(ExactReal::make(0, 3, 1, 9) == ExactReal(9));
}

TEST_CASE("compare uses exact sign analysis") {
  CHECK(indexlab::compare(kSqrt2Minus1, ExactReal::rational(1, 2)) < 0);
  CHECK(indexlab::compare(kSqrt2Minus1, kSqrt2Minus1) == 0);
  CHECK(indexlab::compare(ExactReal::rational(3, 2), ExactReal::sqrt(2)) > 0);
  CHECK(ExactReal::sqrt(2) > ExactReal::rational(14142, 10000));
  CHECK(ExactReal::sqrt(2) < ExactReal::rational(14143, 10000));
  CHECK_THROWS_AS((void)indexlab::compare(ExactReal::sqrt(2), ExactReal::sqrt(3)), indexlab::UnsupportedField);
  // Equality is structural and never throws.
  CHECK_FALSE(ExactReal::sqrt(2) == ExactReal::sqrt(3));
}

TEST_CASE("floor of integer multiples") {
  CHECK(indexlab::floor_scaled(kSqrt2Minus1, 1) == 0);
  CHECK(indexlab::floor_scaled(kSqrt2Minus1, 3) == 1);
  CHECK(indexlab::floor_scaled(ExactReal::rational(1, 2), 4) == 2);
  CHECK(indexlab::floor_scaled(-kSqrt2Minus1, 1) == -1);
  CHECK(ExactReal::rational(-7, 2).floor() == -4);
  CHECK(ExactReal::rational(-7, 2).ceil() == -3);
  CHECK(ExactReal::sqrt(2).ceil() == 2);
}

TEST_CASE("arithmetic stays canonical within one field") {
  const auto x = ExactReal::make(1, 2, 3, 5);
  const auto y = ExactReal::make(-4, 1, 7, 5);
  CHECK((x + y) - y == x);
  CHECK((x * y) / y == x);
  CHECK(x - x == ExactReal(0));
  CHECK(kSqrt2Minus1 * kSqrt2Minus1 == ExactReal::make(3, -2, 1, 2));
  CHECK(kSqrt2Minus1.conjugate() == ExactReal::make(-1, -1, 1, 2));
  CHECK((kSqrt2Minus1 * kSqrt2Minus1.conjugate()) == ExactReal(-1));
  CHECK(ExactReal(1) / kSqrt2Minus1 == ExactReal::make(1, 1, 1, 2));
  CHECK_THROWS_AS(x / ExactReal(0), indexlab::DivisionByZero);
  CHECK_THROWS_AS(ExactReal::sqrt(2) + ExactReal::sqrt(3), indexlab::UnsupportedField);
  CHECK((-x).abs() == x.abs());
}

TEST_CASE("parse accepts every documented form") {
  CHECK(ExactReal::parse("3") == ExactReal(3));
  CHECK(ExactReal::parse("-3/6") == ExactReal::rational(-1, 2));
  CHECK(ExactReal::parse("(-1+1*sqrt(2))/1") == kSqrt2Minus1);
  CHECK(ExactReal::parse(" ( -1 + sqrt(2) ) ") == kSqrt2Minus1);
  CHECK(ExactReal::parse("-1+sqrt(2)") == kSqrt2Minus1);
  CHECK(ExactReal::parse("sqrt(2)") == ExactReal::sqrt(2));
  CHECK(ExactReal::parse("(3-2*sqrt(5))/4") == ExactReal::make(3, -2, 4, 5));
  CHECK(ExactReal::parse("(1+0*sqrt(0))/2") == ExactReal::rational(1, 2));
  CHECK_THROWS_AS(ExactReal::parse(""), indexlab::ParseError);
  CHECK_THROWS_AS(ExactReal::parse("1/0"), indexlab::DivisionByZero);
  CHECK_THROWS_AS(ExactReal::parse("sqrt(2)+sqrt(3)"), indexlab::ParseError);
  CHECK_THROWS_AS(ExactReal::parse("1 2"), indexlab::ParseError);
  CHECK_THROWS_AS(ExactReal::parse("abc"), indexlab::ParseError);
}

TEST_CASE("wire format round-trips") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> v(-50, 50), den(1, 50), rad(0, 30);
  for (int t = 0; t < 500; ++t) {
    const auto x = ExactReal::make(v(rng), v(rng), den(rng), rad(rng));
    CHECK(ExactReal::parse(x.to_string()) == x);
  }
}

TEST_CASE("large values keep full precision") {
  const BigInt big = BigInt(1) << 200;
  const auto x = ExactReal::make(big, 1, 3, 2);
  CHECK(x.floor() == oracle::floor_multiple(x, 1));
  CHECK(indexlab::floor_scaled(kSqrt2Minus1, 100000) == oracle::floor_multiple(kSqrt2Minus1, 100000));
}
