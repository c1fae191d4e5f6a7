#include "hp0/rational.hpp"

#include <random>

#include "doctest.h"

using hp0::BigRat;
using hp0::Rat64;

TEST_CASE("Rat64 basic arithmetic") {
  Rat64 a(1, 2), b(1, 3);
  CHECK((a + b) == Rat64(5, 6));
  CHECK((a - b) == Rat64(1, 6));
  CHECK((a * b) == Rat64(1, 6));
  CHECK((a / b) == Rat64(3, 2));
  CHECK((-a) == Rat64(-1, 2));
  CHECK(Rat64(2, -4) == Rat64(-1, 2));
  CHECK(Rat64(0, 7).is_zero());
  CHECK_THROWS_AS(Rat64(1, 0), std::domain_error);
  CHECK_THROWS_AS(a / Rat64(0), std::domain_error);
}

TEST_CASE("Rat64 overflow reports instead of wrapping") {
  Rat64 big(INT64_MAX / 2, 1);
  CHECK_THROWS_AS(big * Rat64(4), hp0::RatOverflow);
  CHECK_THROWS_AS(big + big, hp0::RatOverflow);
}

TEST_CASE("Rat64 agrees with GMP on random inputs") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<long> num(-1000, 1000);
  std::uniform_int_distribution<long> den(1, 60);
  for (int i = 0; i < 2000; ++i) {
    Rat64 a(num(rng), den(rng)), b(num(rng), den(rng));
    BigRat ba = hp0::to_bigrat(a), bb = hp0::to_bigrat(b);
    CHECK(hp0::to_bigrat(a + b) == ba + bb);
    CHECK(hp0::to_bigrat(a - b) == ba - bb);
    CHECK(hp0::to_bigrat(a * b) == ba * bb);
    if (!b.is_zero()) CHECK(hp0::to_bigrat(a / b) == ba / bb);
  }
}

TEST_CASE("rational parsing") {
  CHECK(hp0::parse_bigrat("3/4") == BigRat(3, 4));
  CHECK(hp0::parse_bigrat("-7") == BigRat(-7));
  CHECK_THROWS_AS(hp0::parse_bigrat("x"), std::invalid_argument);
  CHECK_THROWS_AS(hp0::parse_bigrat("1/0"), std::invalid_argument);
}
