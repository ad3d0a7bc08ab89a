#include <doctest.h>

#include <random>

#include "hmkit/error.hpp"
#include "hmkit/rat.hpp"

using hmkit::Rat;

namespace {

Rat random_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> num(-1000, 1000);
  std::uniform_int_distribution<std::int64_t> den(1, 97);
  return Rat(num(rng), den(rng));
}

}  // namespace

TEST_CASE("rat: exact fraction arithmetic") {
  CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
  CHECK((Rat(1, 3) + Rat(1, 6)).str() == "1/2");
  CHECK(Rat(2, 4).num() == 1);
  CHECK(Rat(2, 4).den() == 2);
  CHECK(Rat(3, -6).str() == "-1/2");
  CHECK(Rat(7).str() == "7");
  CHECK(Rat(1, 2) * Rat(2, 3) == Rat(1, 3));
  CHECK(Rat(1, 2) / Rat(1, 4) == Rat(2));
  CHECK(Rat(1, 2) - Rat(3, 4) == Rat(-1, 4));
  CHECK(hmkit::abs(Rat(-5, 3)) == Rat(5, 3));
  CHECK(hmkit::min(Rat(1, 3), Rat(1, 4)) == Rat(1, 4));
  CHECK(hmkit::max(Rat(1, 3), Rat(1, 4)) == Rat(1, 3));
  CHECK(Rat(1, 3) < Rat(1, 2));
  CHECK(Rat(-1, 3) > Rat(-1, 2));
}

TEST_CASE("rat: x - x is zero") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    const Rat x = random_rat(rng);
    CHECK((x - x).is_zero());
    CHECK((x - x).den() == 1);
  }
}

TEST_CASE("rat: division by zero is an explicit error") {
  CHECK_THROWS_AS(Rat(1, 0), hmkit::DivisionByZero);
  CHECK_THROWS_AS(Rat(1) / Rat(0), hmkit::DivisionByZero);
  CHECK_FALSE(hmkit::checked_div(Rat(1), Rat(0)).has_value());
  CHECK(*hmkit::checked_div(Rat(1), Rat(3)) == Rat(1, 3));
}

TEST_CASE("rat: parse and print") {
  CHECK(Rat::parse("3/9") == Rat(1, 3));
  CHECK(Rat::parse("-2") == Rat(-2));
  CHECK(Rat::parse("0") == Rat(0));
  CHECK(Rat::parse("10/4").str() == "5/2");
  CHECK_THROWS_AS(Rat::parse("1/0"), hmkit::DivisionByZero);
  CHECK_THROWS_AS(Rat::parse(""), hmkit::Error);
  CHECK_THROWS_AS(Rat::parse("1/-2"), hmkit::Error);
  CHECK_THROWS_AS(Rat::parse("a/2"), hmkit::Error);
  CHECK_THROWS_AS(Rat::parse("1.5"), hmkit::Error);
}

TEST_CASE("rat: field laws hold exactly on random values") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 500; ++i) {
    const Rat x = random_rat(rng);
    const Rat y = random_rat(rng);
    const Rat z = random_rat(rng);
    CHECK((x + y) + z == x + (y + z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(Rat::parse((x * y - z).str()) == x * y - z);
    if (!y.is_zero()) CHECK((x / y) * y == x);
  }
}
