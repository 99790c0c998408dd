#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "revmul/digits.hpp"

namespace revmul {

struct EnumerationRequest {
  int base = 2;
  int length = 2;
  std::optional<int> k_filter;
  std::optional<std::size_t> limit;
};

// Trusted oracle: scans every multiplicand in [n^(L-1), n^L) with a nonzero
// last digit and tests the defining equation directly. Deterministic order:
// (k ascending, value ascending).
std::vector<Solution> enumerate_naive(const EnumerationRequest& req);

// Production engine: union of solve_for_k over k = 2..n-1 (or the filtered k),
// in the same canonical order as enumerate_naive.
std::vector<Solution> enumerate_fast(const EnumerationRequest& req);

// Carry-propagation solver for one multiplier. Digit pairs (j, L-1-j) are
// assigned from the outermost positions inward; with the product equal to the
// exact reversal, the longhand relation at LSB position j is
//   k*x[j] + carry[j] = x[L-1-j] + n*carry[j+1],
// which forces the high digit of each pair and pins every carry (all carries
// lie in [0, k-1], and the final carry is zero). Results sorted by value.
std::vector<Solution> solve_for_k(int base, int length, int k);

// True iff any solution of this length exists; stops at the first find.
bool exists_solution(int base, int length);

}  // namespace revmul
