#pragma once

#include <optional>

#include "revmul/digits.hpp"

namespace revmul {

// Mod-(n+1) classification of a 5-digit solution. s is the alternating digit
// sum a-b+c-d+e (MSB first); when p = n+1 divides s, f = s/p. For a genuine
// solution with p prime, f is always defined and lies in {-1,0,1,2}; a result
// violating that carries the anomaly flag (it would mean an engine bug, not
// new mathematics).
struct FClassification {
  int p = 0;
  long long s = 0;
  std::optional<int> f;
  bool p_prime = false;
  bool anomaly = false;
};

bool is_prime(long long m);

// a - b + c - d + e over MSB-first digits; symmetric under reversal.
// Usage error unless the string has exactly 5 digits.
long long alternating_sum(const DigitString& d);

FClassification f_class(const Solution& sol);

// Central digit removed; odd length >= 3 required.
DigitString delete_middle(const DigitString& d);

// Result of deleting the middle digit of an odd-length solution.
// f_class is present for 5-digit sources only.
struct ProjectionOutcome {
  DigitString projected;
  bool same_k_holds = false;
  std::optional<int> any_k;
  std::optional<FClassification> source_f;

  // A counterexample: the projection solves for no multiplier at all.
  bool counterexample() const { return !any_k.has_value(); }
};

// 5 -> 4 projection: does the source's k still work, does any k work, and
// how does the source classify.
ProjectionOutcome question1_check(const Solution& sol);

// 3 -> 2 projection. With n+1 prime, any_k must be present for every 3-digit
// solution; absence there is an anomaly. With n+1 composite, absence is a
// legitimate (and reportable) phenomenon — smallest witness is base 11,
// 7*(1,1,8) = (8,1,1) whose projection (1,8) has no multiplier.
ProjectionOutcome kaczynski_project(const Solution& sol);

// Evaluates k[an^3+(b-a+f)n^2+(d-e)n+e] = en^3+(d-e+f)n^2+(b-a)n+a over plain
// integers (coefficients may be negative or exceed n). Must hold for every
// 5-digit solution with defined f; false signals an engine bug.
// Usage error when f is undefined.
bool derived_identity_check(const Solution& sol);

}  // namespace revmul
