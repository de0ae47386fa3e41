#include <random>

#include "doctest.h"

#include "growth/integer.hpp"
#include "growth/quadratic.hpp"

using growth::BigInt;
using growth::Integer;

TEST_SUITE("integer") {
  TEST_CASE("small arithmetic matches int64") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> d(-1'000'000'000, 1'000'000'000);
    for (int i = 0; i < 2000; ++i) {
      const std::int64_t a = d(rng), b = d(rng);
      CHECK((Integer(a) + Integer(b)).to_int64() == a + b);
      CHECK((Integer(a) - Integer(b)).to_int64() == a - b);
      CHECK((Integer(a) * Integer(b)).to_int64() == a * b);
      CHECK(((Integer(a) <=> Integer(b)) == (a <=> b)));
    }
  }

  TEST_CASE("overflow past 128 bits spills and stays exact") {
    const Integer big = Integer::from_int128(static_cast<__int128>(1) << 120);
    const Integer sq = big * big;
    CHECK_FALSE(sq.fits_int128());
    CHECK(sq.to_big() == (BigInt(1) << 240));
    // Returning to range normalizes back to the inline form.
    const Integer back = sq - sq + Integer(3);
    CHECK(back.fits_int128());
    CHECK(back == Integer(3));
    CHECK(sq > big);
    CHECK(-sq < Integer(0));
    CHECK(Integer::from_big(BigInt(5)).fits_int128());
  }

  TEST_CASE("property: big arithmetic agrees with cpp_int") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
      BigInt x = 1, y = 1;
      Integer a = 1, b = 1;
      const int n = static_cast<int>(rng() % 8);
      for (int j = 0; j < n; ++j) {
        const auto f = static_cast<std::int64_t>(rng() % 2'000'000'001) - 1'000'000'000;
        const auto g = static_cast<std::int64_t>(rng() % 2'000'000'001) - 1'000'000'000;
        x *= f; a *= f;
        y *= g; b *= g;
      }
      CHECK((a + b).to_big() == x + y);
      CHECK((a - b).to_big() == x - y);
      CHECK((a * b).to_big() == x * y);
      CHECK(((a <=> b) == 0) == (x == y));
      CHECK(((a <=> b) < 0) == (x < y));
    }
  }

  TEST_CASE("keys are injective across representations") {
    std::string k1, k2, k3, k4;
    Integer(0).append_key(k1);
    Integer(-1).append_key(k2);
    Integer(1).append_key(k3);
    (Integer::from_int128(static_cast<__int128>(1) << 126) * Integer(4)).append_key(k4);
    CHECK(k1 != k2);
    CHECK(k2 != k3);
    CHECK(k3 != k4);
    std::string a, b;
    Integer(300).append_key(a);
    Integer(44).append_key(b);
    CHECK(a != b);
  }

  TEST_CASE("isqrt and to_int64 range") {
    CHECK(growth::isqrt(Integer(0)) == Integer(0));
    CHECK(growth::isqrt(Integer(15)) == Integer(3));
    CHECK(growth::isqrt(Integer(16)) == Integer(4));
    const Integer huge = Integer::from_int128(static_cast<__int128>(1) << 100);
    CHECK_THROWS_AS((void)huge.to_int64(), std::overflow_error);
  }
}

TEST_SUITE("quadratic") {
  using growth::QuadraticValue;

  TEST_CASE("normal form and rendering") {
    CHECK(QuadraticValue(3, 1, 5).to_string() == "(3+sqrt(5))/2");
    CHECK(QuadraticValue(4, 2, 3).to_string() == "2+sqrt(3)");
    CHECK(QuadraticValue(4, 1, 12).to_string() == "2+sqrt(3)");  // sqrt(12) = 2 sqrt(3)
    CHECK(QuadraticValue(2, 1, 16) == QuadraticValue::integer(3));
    CHECK(QuadraticValue(0, 2, 2).to_string() == "sqrt(2)");
  }

  TEST_CASE("property: exact comparison agrees with long double away from ties") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 3000; ++i) {
      const auto p1 = static_cast<std::int64_t>(rng() % 41) - 20, q1 = static_cast<std::int64_t>(rng() % 21) - 10;
      const auto p2 = static_cast<std::int64_t>(rng() % 41) - 20, q2 = static_cast<std::int64_t>(rng() % 21) - 10;
      const auto d1 = static_cast<std::int64_t>(rng() % 30), d2 = static_cast<std::int64_t>(rng() % 30);
      const QuadraticValue a(p1, q1, d1), b(p2, q2, d2);
      const long double x = a.to_long_double(), y = b.to_long_double();
      if (x < y - 1e-9L) CHECK(a < b);
      if (x > y + 1e-9L) CHECK(a > b);
      CHECK((a == b) == (QuadraticValue::compare(a, b) == 0));
    }
  }

  TEST_CASE("ties across different radicands") {
    // sqrt(8) = 2 sqrt(2) and sqrt(18) = 3 sqrt(2)
    CHECK(QuadraticValue(0, 1, 8) == QuadraticValue(0, 2, 2));
    CHECK(QuadraticValue(0, 2, 8) < QuadraticValue(0, 2, 18));
    CHECK(QuadraticValue(1, 1, 2) > QuadraticValue(1, 1, 1));
  }
}
