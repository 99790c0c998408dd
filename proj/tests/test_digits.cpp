#include "doctest.h"

#include <random>

#include "revmul/digits.hpp"

using namespace revmul;

TEST_CASE("value_of is the MSB-first positional value") {
  CHECK(value_of(DigitString(10, {2, 1, 7, 8})) == 2178);
  CHECK(value_of(DigitString(10, {7})) == 7);
  CHECK(value_of(DigitString(2, {1, 0})) == 2);
  CHECK(value_of(DigitString(22, {2, 8, 3, 13, 16})) == 555450);
  CHECK(value_of(DigitString(10, {0, 0, 0})) == 0);
}

TEST_CASE("value_of fails loudly past 128 bits") {
  // 2^128 needs 129 binary digits; the all-ones 128-digit string is fine.
  std::vector<int> ones(128, 1);
  CHECK_NOTHROW(value_of(DigitString(2, ones)));
  ones.push_back(1);
  CHECK_THROWS_AS(value_of(DigitString(2, ones)), capacity_error);
  CHECK_THROWS_AS(checked_pow(65536, 8), capacity_error);
}

TEST_CASE("digit strings validate base and digit range") {
  CHECK_THROWS_AS(DigitString(1, {0}), std::invalid_argument);
  CHECK_THROWS_AS(DigitString(10, {}), std::invalid_argument);
  CHECK_THROWS_AS(DigitString(10, {10}), std::invalid_argument);
  CHECK_THROWS_AS(DigitString(10, {-1}), std::invalid_argument);
  CHECK_NOTHROW(DigitString(10, {0}));  // leading zeros are representable
}

TEST_CASE("reverse flips the digit order and nothing else") {
  CHECK(reverse(DigitString(10, {2, 1, 7, 8})) == DigitString(10, {8, 7, 1, 2}));
  CHECK(reverse(DigitString(10, {1, 0, 1})) == DigitString(10, {1, 0, 1}));
  CHECK(reverse(DigitString(22, {2, 8, 3, 13, 16})) == DigitString(22, {16, 13, 3, 8, 2}));
}

TEST_CASE("check_solution finds k exactly when the equation holds") {
  CHECK(check_solution(DigitString(10, {2, 1, 7, 8})) == 4);
  CHECK(check_solution(DigitString(10, {1, 0, 8, 9})) == 9);
  CHECK_FALSE(check_solution(DigitString(22, {2, 8, 13, 16})).has_value());
  CHECK_FALSE(check_solution(DigitString(10, {1, 2})).has_value());  // 21/12 not integral
  // palindromes give k = 1, which the definition excludes
  CHECK_FALSE(check_solution(DigitString(10, {3, 2, 3})).has_value());
  CHECK_FALSE(check_solution(DigitString(10, {7})).has_value());
  // end digits must both be nonzero
  CHECK_FALSE(check_solution(DigitString(10, {1, 0})).has_value());
  CHECK_FALSE(check_solution(DigitString(10, {0, 9, 0, 1})).has_value());
}

TEST_CASE("digits_of expands MSB-first with left padding") {
  CHECK(digits_of(2178, 10, 4) == DigitString(10, {2, 1, 7, 8}));
  CHECK(digits_of(0, 10, 3) == DigitString(10, {0, 0, 0}));
  CHECK(digits_of(555450, 22, 5) == DigitString(22, {2, 8, 3, 13, 16}));
  CHECK(digits_of(7, 10, 1) == DigitString(10, {7}));
  CHECK(digits_of(0, 7) == DigitString(7, {0}));  // min_width clamps to 1
  CHECK(digits_of(2178, 10, 6) == DigitString(10, {0, 0, 2, 1, 7, 8}));
}

TEST_CASE("value parsing round-trips through decimal text") {
  CHECK(to_string(Value(0)) == "0");
  CHECK(to_string(Value(555450)) == "555450");
  CHECK(parse_value("555450") == 555450);
  const Value big = checked_pow(2, 100);
  CHECK(parse_value(to_string(big)) == big);
  CHECK_THROWS_AS(parse_value("12x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_value(""), std::invalid_argument);
}

TEST_CASE("properties over random digit strings") {
  std::mt19937 rng(20240825);
  for (int round = 0; round < 2000; ++round) {
    const int base = 2 + static_cast<int>(rng() % 60);
    const std::size_t len = 1 + rng() % 7;
    std::vector<int> digits(len);
    for (auto& d : digits) d = static_cast<int>(rng() % static_cast<unsigned>(base));
    const DigitString s(base, digits);

    // reverse is an involution
    CHECK(reverse(reverse(s)) == s);

    // digits_of(value_of(s)) reproduces s at the same width
    const Value v = value_of(s);
    CHECK(digits_of(v, base, len) == s);

    // any returned k satisfies the definition, and the check is stable
    // under value round-tripping
    const auto k = check_solution(s);
    if (k) {
      CHECK(*k > 1);
      CHECK(*k < base);
      CHECK(s.front() != 0);
      CHECK(s.back() != 0);
      CHECK(checked_mul(static_cast<Value>(*k), v) == value_of(reverse(s)));
    }
    CHECK(check_solution(digits_of(v, base, len)) == k);
  }
}

TEST_CASE("to_solution packages check_solution") {
  const auto sol = to_solution(DigitString(10, {2, 1, 7, 8}));
  REQUIRE(sol.has_value());
  CHECK(sol->k == 4);
  CHECK(sol->value() == 2178);
  CHECK(sol->reversal() == 8712);
  CHECK(sol->base() == 10);
  CHECK_FALSE(to_solution(DigitString(10, {1, 2})).has_value());
}
