#include "doctest.h"

#include <random>

#include "revmul/enumerate.hpp"

using namespace revmul;

namespace {

Solution make(int base, int k, std::vector<int> digits) {
  return Solution{k, DigitString(base, std::move(digits))};
}

std::vector<Solution> fast(int base, int length) {
  return enumerate_fast(EnumerationRequest{base, length, std::nullopt, std::nullopt});
}

std::vector<Solution> naive(int base, int length) {
  return enumerate_naive(EnumerationRequest{base, length, std::nullopt, std::nullopt});
}

}  // namespace

TEST_CASE("base 10 length 4 gives exactly the classical pair") {
  const std::vector<Solution> want = {make(10, 4, {2, 1, 7, 8}), make(10, 9, {1, 0, 8, 9})};
  CHECK(naive(10, 4) == want);
  CHECK(fast(10, 4) == want);
}

TEST_CASE("small bases") {
  CHECK(naive(5, 2) == std::vector<Solution>{make(5, 2, {1, 3})});
  CHECK(fast(5, 2) == std::vector<Solution>{make(5, 2, {1, 3})});
  CHECK(fast(5, 3) == std::vector<Solution>{make(5, 2, {1, 4, 3})});
  CHECK(fast(2, 5).empty());  // no k with 1 < k < 2
  CHECK(naive(2, 5).empty());
  CHECK(fast(10, 1).empty());  // 1-digit forces k = 1
  CHECK(naive(10, 1).empty());
}

TEST_CASE("solve_for_k isolates one multiplier") {
  CHECK(solve_for_k(10, 4, 4) == std::vector<Solution>{make(10, 4, {2, 1, 7, 8})});
  CHECK(solve_for_k(10, 4, 9) == std::vector<Solution>{make(10, 9, {1, 0, 8, 9})});
  CHECK(solve_for_k(10, 4, 5).empty());
  CHECK_THROWS_AS(solve_for_k(10, 4, 1), std::invalid_argument);
  CHECK_THROWS_AS(solve_for_k(10, 4, 10), std::invalid_argument);
}

TEST_CASE("multiple solutions for one k come out in ascending value order") {
  // base 11, length 4, k=3 has six solutions
  const std::vector<Solution> want = {
      make(11, 3, {1, 4, 1, 4}),  make(11, 3, {1, 5, 5, 4}),   make(11, 3, {1, 6, 9, 4}),
      make(11, 3, {2, 8, 2, 8}),  make(11, 3, {2, 9, 6, 8}),   make(11, 3, {2, 10, 10, 8}),
  };
  CHECK(solve_for_k(11, 4, 3) == want);
  for (std::size_t i = 1; i < want.size(); ++i) {
    CHECK(want[i - 1].value() < want[i].value());
  }
}

TEST_CASE("canonical order is k ascending then value ascending") {
  const std::vector<Solution> want = {
      make(11, 2, {3, 10, 7}), make(11, 3, {1, 5, 4}), make(11, 3, {2, 10, 8}),
      make(11, 5, {1, 10, 9}), make(11, 7, {1, 1, 8}),
  };
  CHECK(fast(11, 3) == want);
  CHECK(naive(11, 3) == want);
}

TEST_CASE("larger bases 22 and 30") {
  const auto sols22 = fast(22, 5);
  REQUIRE(sols22.size() == 4);
  CHECK(sols22[0] == make(22, 3, {2, 16, 11, 5, 8}));
  CHECK(sols22[1] == make(22, 7, {2, 8, 3, 13, 16}));
  CHECK(sols22[2] == make(22, 10, {2, 1, 21, 19, 20}));
  CHECK(sols22[3] == make(22, 21, {1, 0, 21, 20, 21}));

  const auto sols30 = fast(30, 5);
  REQUIRE(sols30.size() == 8);
  CHECK(sols30[1] == make(30, 3, {3, 22, 15, 7, 11}));
  CHECK(sols30[4] == make(30, 8, {2, 13, 8, 16, 19}));
}

TEST_CASE("k filter and limit") {
  const auto filtered = enumerate_fast(EnumerationRequest{22, 5, 7, std::nullopt});
  CHECK(filtered == std::vector<Solution>{make(22, 7, {2, 8, 3, 13, 16})});
  CHECK(enumerate_naive(EnumerationRequest{22, 5, 7, std::nullopt}) == filtered);
  // an out-of-range filter matches nothing rather than erroring
  CHECK(enumerate_fast(EnumerationRequest{10, 4, 1, std::nullopt}).empty());

  const auto all = fast(11, 3);
  for (std::size_t m = 0; m <= all.size(); ++m) {
    const auto limited = enumerate_fast(EnumerationRequest{11, 3, std::nullopt, m});
    CHECK(limited == std::vector<Solution>(all.begin(), all.begin() + static_cast<long>(m)));
  }
}

TEST_CASE("engines agree element-for-element on small bases") {
  for (int n = 2; n <= 10; ++n) {
    for (int len = 2; len <= 5; ++len) {
      CAPTURE(n);
      CAPTURE(len);
      CHECK(fast(n, len) == naive(n, len));
    }
  }
}

TEST_CASE("solve_for_k partitions enumerate_fast by k") {
  for (int n : {8, 11, 22}) {
    const auto all = fast(n, 5);
    std::vector<Solution> merged;
    for (int k = 2; k < n; ++k) {
      const auto part = solve_for_k(n, 5, k);
      for (const auto& s : part) CHECK(s.k == k);
      merged.insert(merged.end(), part.begin(), part.end());
    }
    CHECK(merged == all);
  }
}

TEST_CASE("every returned solution passes check_solution") {
  for (int n = 3; n <= 16; ++n) {
    for (int len : {2, 3, 4, 5}) {
      for (const Solution& s : fast(n, len)) {
        CHECK(check_solution(s.digits) == s.k);
      }
    }
  }
}

TEST_CASE("exists_solution short-circuits to the same answer") {
  CHECK(exists_solution(5, 2));
  CHECK_FALSE(exists_solution(10, 2));
  CHECK(exists_solution(10, 4));
  for (int n = 2; n <= 20; ++n) {
    for (int len = 2; len <= 5; ++len) {
      CHECK(exists_solution(n, len) == !fast(n, len).empty());
    }
  }
}

TEST_CASE("frozen existence table, lengths 2..7") {
  const std::vector<std::pair<int, std::vector<int>>> table = {
      {3, {0, 0, 1, 1, 1, 1}},  {4, {0, 0, 1, 1, 1, 1}},  {5, {1, 1, 1, 1, 1, 1}},
      {6, {0, 0, 1, 1, 1, 1}},  {7, {1, 1, 1, 1, 1, 1}},  {8, {1, 1, 1, 1, 1, 1}},
      {9, {1, 1, 1, 1, 1, 1}},  {10, {0, 0, 1, 1, 1, 1}}, {11, {1, 1, 1, 1, 1, 1}},
      {12, {0, 0, 1, 1, 1, 1}},
  };
  for (const auto& [n, bits] : table) {
    for (int len = 2; len <= 7; ++len) {
      CAPTURE(n);
      CAPTURE(len);
      CHECK(exists_solution(n, len) == (bits[static_cast<std::size_t>(len - 2)] == 1));
    }
  }
}

TEST_CASE("length 6 and 7 solutions at base 10 extend the classical pair") {
  const std::vector<Solution> want6 = {make(10, 4, {2, 1, 9, 9, 7, 8}),
                                       make(10, 9, {1, 0, 9, 9, 8, 9})};
  CHECK(fast(10, 6) == want6);
  CHECK(naive(10, 6) == want6);
  const std::vector<Solution> want7 = {make(10, 4, {2, 1, 9, 9, 9, 7, 8}),
                                       make(10, 9, {1, 0, 9, 9, 9, 8, 9})};
  CHECK(fast(10, 7) == want7);
  CHECK(naive(10, 7) == want7);
}

TEST_CASE("engines also agree at lengths 6 and 7") {
  for (int n = 2; n <= 8; ++n) {
    for (int len : {6, 7}) {
      CAPTURE(n);
      CAPTURE(len);
      CHECK(fast(n, len) == naive(n, len));
    }
  }
}

TEST_CASE("engines agree on sampled larger bases") {
  std::mt19937 rng(7121); // fixed seed keeps the sample reproducible
  for (int round = 0; round < 6; ++round) {
    const int n = 19 + static_cast<int>(rng() % 30);
    CAPTURE(n);
    CHECK(fast(n, 4) == naive(n, 4));
  }
  CHECK(fast(29, 3) == naive(29, 3));
  CHECK(fast(37, 3) == naive(37, 3));
}

TEST_CASE("bad requests error out") {
  CHECK_THROWS_AS(naive(1, 3), std::invalid_argument);
  CHECK_THROWS_AS(fast(10, 0), std::invalid_argument);
  CHECK_THROWS_AS(fast(65536, 8), capacity_error);  // past the envelope
  CHECK_THROWS_AS(exists_solution(65536, 9), capacity_error);
}
