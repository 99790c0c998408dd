#include "revmul/enumerate.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace revmul {

namespace {

void require_base(int base) {
  if (base < 2) {
    throw std::invalid_argument("base must be at least 2, got " + std::to_string(base));
  }
}

void require_length(int length) {
  if (length < 1) {
    throw std::invalid_argument("length must be at least 1, got " + std::to_string(length));
  }
}

// Envelope guard: the whole multiplicand range must be representable.
void require_envelope(int base, int length) {
  try {
    checked_pow(static_cast<Value>(base), static_cast<unsigned>(length));
  } catch (const capacity_error&) {
    throw capacity_error("base " + std::to_string(base) + " length " + std::to_string(length) +
                         " exceeds the 128-bit arithmetic envelope");
  }
}

// DFS over coupled digit pairs, LSB-indexed scratch in x. carry_lo is the
// carry into position j from the low side; carry_hi is the carry the high
// side still has to receive into position L-j. Visit gets the LSB-first
// assignment and returns false to stop the whole search.
template <typename Visit>
bool search_pairs(int n, int L, int k, std::vector<int>& x, int j, long long carry_lo,
                  long long carry_hi, Visit&& visit) {
  const int h = L - 1 - j;
  if (j > h) {
    // Pairs met (even length): the forward and backward carries into
    // position L/2 must agree.
    if (carry_lo != carry_hi) return true;
    return visit(x);
  }
  if (j == h) {
    // Middle digit maps to itself: (k-1)*x[j] = n*carry_hi - carry_lo.
    const long long num = static_cast<long long>(n) * carry_hi - carry_lo;
    if (num < 0 || num % (k - 1) != 0) return true;
    const long long mid = num / (k - 1);
    if (mid > n - 1) return true;
    x[j] = static_cast<int>(mid);
    return visit(x);
  }
  for (int lo = (j == 0 ? 1 : 0); lo < n; ++lo) {
    const long long t = static_cast<long long>(k) * lo + carry_lo;
    const int hi = static_cast<int>(t % n);
    if (j == 0 && hi == 0) continue;  // leading digit of the multiplicand
    // Backward relation at position L-1-j pins the carry into it; every
    // carry of a multiplication by k lies in [0, k-1].
    const long long carry_in = lo + static_cast<long long>(n) * carry_hi -
                               static_cast<long long>(k) * hi;
    if (carry_in < 0 || carry_in > k - 1) continue;
    x[j] = lo;
    x[h] = hi;
    if (!search_pairs(n, L, k, x, j + 1, t / n, carry_in, visit)) return false;
  }
  return true;
}

template <typename Visit>
void search_for_k(int base, int length, int k, Visit&& visit) {
  if (length < 2) return;  // a 1-digit number forces k = 1, excluded
  std::vector<int> x(static_cast<std::size_t>(length), 0);
  search_pairs(base, length, k, x, 0, 0, 0, visit);
}

bool solution_order(const Solution& a, const Solution& b) {
  if (a.k != b.k) return a.k < b.k;
  return a.value() < b.value();
}

std::vector<Solution> apply_limit(std::vector<Solution> sols, const std::optional<std::size_t>& limit) {
  if (limit && sols.size() > *limit) {
    sols.erase(sols.begin() + static_cast<std::ptrdiff_t>(*limit), sols.end());
  }
  return sols;
}

}  // namespace

std::vector<Solution> enumerate_naive(const EnumerationRequest& req) {
  require_base(req.base);
  require_length(req.length);
  require_envelope(req.base, req.length);
  std::vector<Solution> out;
  if (req.length < 2) return out;

  const auto n = static_cast<Value>(req.base);
  const Value first = checked_pow(n, static_cast<unsigned>(req.length - 1));
  const Value last = checked_mul(first, n);
  for (Value v = first; v < last; ++v) {
    if (v % n == 0) continue;  // last digit must be nonzero
    const DigitString d = digits_of(v, req.base, static_cast<std::size_t>(req.length));
    if (auto k = check_solution(d)) {
      if (req.k_filter && *k != *req.k_filter) continue;
      out.push_back(Solution{*k, d});
    }
  }
  std::sort(out.begin(), out.end(), solution_order);
  return apply_limit(std::move(out), req.limit);
}

std::vector<Solution> solve_for_k(int base, int length, int k) {
  require_base(base);
  require_length(length);
  if (k <= 1 || k >= base) {
    throw std::invalid_argument("multiplier must satisfy 1 < k < base, got k=" +
                                std::to_string(k) + " base=" + std::to_string(base));
  }
  require_envelope(base, length);
  std::vector<Solution> out;
  search_for_k(base, length, k, [&](const std::vector<int>& lsb_digits) {
    std::vector<int> msb(lsb_digits.rbegin(), lsb_digits.rend());
    out.push_back(Solution{k, DigitString(base, std::move(msb))});
    return true;
  });
  std::sort(out.begin(), out.end(), solution_order);
  return out;
}

std::vector<Solution> enumerate_fast(const EnumerationRequest& req) {
  require_base(req.base);
  require_length(req.length);
  require_envelope(req.base, req.length);
  std::vector<Solution> out;
  if (req.length < 2) return out;
  if (req.k_filter) {
    const int k = *req.k_filter;
    if (k <= 1 || k >= req.base) return out;  // no admissible multiplier
    out = solve_for_k(req.base, req.length, k);
  } else {
    for (int k = 2; k < req.base; ++k) {
      auto part = solve_for_k(req.base, req.length, k);
      out.insert(out.end(), part.begin(), part.end());
    }
  }
  return apply_limit(std::move(out), req.limit);
}

bool exists_solution(int base, int length) {
  require_base(base);
  require_length(length);
  require_envelope(base, length);
  for (int k = 2; k < base; ++k) {
    bool found = false;
    search_for_k(base, length, k, [&](const std::vector<int>&) {
      found = true;
      return false;  // stop at the first hit
    });
    if (found) return true;
  }
  return false;
}

}  // namespace revmul
