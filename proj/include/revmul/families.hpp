#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "revmul/digits.hpp"

namespace revmul {

// Parameters of the structured family: base n and 1 <= a <= n-1.
struct FamilyParams {
  int base = 2;
  int a = 1;

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

// The 5-digit member (a, a-1, n-1, n-a-1, n-a) with k = (n-a)/a, defined when
// a divides n-a and 1 < k < n (a = n/2 gives k = 1 and is excluded).
std::optional<Solution> family5(const FamilyParams& params);

// The 4-digit member (a, a-1, n-a-1, n-a), same k and same condition; equals
// the middle-digit deletion of the 5-digit member whenever both exist.
std::optional<Solution> family4(const FamilyParams& params);

struct FamilyPair {
  FamilyParams params;
  Solution four;
  Solution five;
};

// Every admissible a for this base, ascending.
std::vector<FamilyPair> family_all(int base);

// The a = 1 instances, defined for every base >= 3 with k = n-1.
// Returns (4-digit, 5-digit); usage error below base 3.
std::pair<Solution, Solution> corollary_solutions(int base);

// Exact digit-pattern membership test for solutions of length 4 or 5.
std::optional<FamilyParams> is_in_family(const Solution& sol);

}  // namespace revmul
