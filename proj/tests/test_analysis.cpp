#include "doctest.h"

#include "revmul/analysis.hpp"
#include "revmul/enumerate.hpp"
#include "revmul/families.hpp"

using namespace revmul;

namespace {

Solution sol(int base, int k, std::vector<int> digits) {
  return Solution{k, DigitString(base, std::move(digits))};
}

}  // namespace

TEST_CASE("alternating_sum uses MSB-first signs + - + - +") {
  CHECK(alternating_sum(DigitString(10, {1, 0, 9, 8, 9})) == 11);
  CHECK(alternating_sum(DigitString(22, {2, 8, 3, 13, 16})) == 0);
  CHECK(alternating_sum(DigitString(10, {0, 0, 0, 0, 0})) == 0);
  CHECK_THROWS_AS(alternating_sum(DigitString(10, {1, 2, 3})), std::invalid_argument);
  // symmetric under reversal
  for (const DigitString d : {DigitString(22, {2, 16, 11, 5, 8}), DigitString(10, {4, 3, 2, 1, 9})}) {
    CHECK(alternating_sum(d) == alternating_sum(reverse(d)));
  }
}

TEST_CASE("f_class on known solutions") {
  const auto a = f_class(sol(10, 9, {1, 0, 9, 8, 9}));
  CHECK(a.p == 11);
  CHECK(a.s == 11);
  CHECK(a.f == 1);
  CHECK(a.p_prime);
  CHECK_FALSE(a.anomaly);

  const auto b = f_class(sol(22, 7, {2, 8, 3, 13, 16}));
  CHECK(b.p == 23);
  CHECK(b.f == 0);
  CHECK(b.p_prime);

  const auto c = f_class(sol(10, 4, {2, 1, 9, 7, 8}));
  CHECK(c.f == 1);

  // composite p with f defined: base 39 has an f = -1 solution
  const auto d = f_class(sol(39, 5, {1, 29, 9, 29, 8}));
  CHECK(d.p == 40);
  CHECK(d.s == -40);
  CHECK(d.f == -1);
  CHECK_FALSE(d.p_prime);
  CHECK_FALSE(d.anomaly);

  // composite p with p not dividing s: unclassified, no anomaly
  const auto e = f_class(sol(11, 7, {1, 1, 9, 1, 8}));
  CHECK(e.p == 12);
  CHECK(e.s == 16);
  CHECK_FALSE(e.f.has_value());
  CHECK_FALSE(e.anomaly);

  CHECK_THROWS_AS(f_class(sol(10, 4, {2, 1, 7, 8})), std::invalid_argument);
}

TEST_CASE("delete_middle removes exactly the central digit") {
  CHECK(delete_middle(DigitString(10, {1, 0, 9, 8, 9})) == DigitString(10, {1, 0, 8, 9}));
  CHECK(delete_middle(DigitString(22, {2, 8, 3, 13, 16})) == DigitString(22, {2, 8, 13, 16}));
  CHECK(delete_middle(DigitString(5, {1, 4, 3})) == DigitString(5, {1, 3}));
  CHECK_THROWS_AS(delete_middle(DigitString(10, {1, 2, 3, 4})), std::invalid_argument);
  CHECK_THROWS_AS(delete_middle(DigitString(10, {1})), std::invalid_argument);
}

TEST_CASE("question1_check distinguishes projections from counterexamples") {
  const auto good = question1_check(sol(10, 9, {1, 0, 9, 8, 9}));
  CHECK(good.projected == DigitString(10, {1, 0, 8, 9}));
  CHECK(good.same_k_holds);
  CHECK(good.any_k == 9);
  CHECK_FALSE(good.counterexample());
  REQUIRE(good.source_f.has_value());
  CHECK(good.source_f->f == 1);

  const auto ce22 = question1_check(sol(22, 7, {2, 8, 3, 13, 16}));
  CHECK_FALSE(ce22.same_k_holds);
  CHECK_FALSE(ce22.any_k.has_value());
  CHECK(ce22.counterexample());
  CHECK(ce22.source_f->f == 0);

  const auto ce30 = question1_check(sol(30, 3, {3, 22, 15, 7, 11}));
  CHECK(ce30.counterexample());
  CHECK(ce30.source_f->f == 0);
}

TEST_CASE("same_k_holds implies any_k equals the source k") {
  for (int n = 3; n <= 24; ++n) {
    for (const Solution& s : enumerate_fast(EnumerationRequest{n, 5, std::nullopt, std::nullopt})) {
      const auto outcome = question1_check(s);
      if (outcome.same_k_holds) {
        REQUIRE(outcome.any_k.has_value());
        CHECK(*outcome.any_k == s.k);
      }
    }
  }
}

TEST_CASE("kaczynski_project on 3-digit solutions") {
  const auto a = kaczynski_project(sol(5, 2, {1, 4, 3}));
  CHECK(a.projected == DigitString(5, {1, 3}));
  CHECK(a.same_k_holds);
  CHECK(a.any_k == 2);
  CHECK_FALSE(a.source_f.has_value());  // f-classification is a 5-digit construct

  const auto b = kaczynski_project(sol(7, 3, {1, 6, 5}));
  CHECK(b.projected == DigitString(7, {1, 5}));
  CHECK(b.same_k_holds);

  // composite n+1: the theorem's hypothesis fails and so can the projection
  const auto c = kaczynski_project(sol(11, 7, {1, 1, 8}));
  CHECK(c.projected == DigitString(11, {1, 8}));
  CHECK_FALSE(c.same_k_holds);
  CHECK(c.counterexample());
  CHECK_FALSE(is_prime(11 + 1));

  CHECK_THROWS_AS(kaczynski_project(sol(10, 4, {2, 1, 7, 8})), std::invalid_argument);
}

TEST_CASE("3-digit projections always solve when n+1 is prime") {
  for (int n = 3; n <= 40; ++n) {
    if (!is_prime(n + 1)) continue;
    for (const Solution& s : enumerate_fast(EnumerationRequest{n, 3, std::nullopt, std::nullopt})) {
      CAPTURE(n);
      CHECK(kaczynski_project(s).any_k.has_value());
    }
  }
}

TEST_CASE("derived identity holds for every classified solution") {
  CHECK(derived_identity_check(sol(10, 9, {1, 0, 9, 8, 9})));
  CHECK(derived_identity_check(sol(22, 7, {2, 8, 3, 13, 16})));
  CHECK(derived_identity_check(sol(10, 4, {2, 1, 9, 7, 8})));
  CHECK(derived_identity_check(sol(39, 5, {1, 29, 9, 29, 8})));  // f = -1, composite p
  // f undefined is a usage error
  CHECK_THROWS_AS(derived_identity_check(sol(11, 7, {1, 1, 9, 1, 8})), std::invalid_argument);
}

TEST_CASE("prime p forces f in {-1,0,1,2} over a full scan") {
  for (int n = 3; n <= 30; ++n) {
    for (const Solution& s : enumerate_fast(EnumerationRequest{n, 5, std::nullopt, std::nullopt})) {
      const auto fc = f_class(s);
      CHECK_FALSE(fc.anomaly);
      if (fc.p_prime) {
        REQUIRE(fc.f.has_value());
        CHECK(*fc.f >= -1);
        CHECK(*fc.f <= 2);
      }
      if (fc.f) CHECK(fc.s == static_cast<long long>(*fc.f) * fc.p);
    }
  }
}
