#include "revmul/families.hpp"

#include <stdexcept>
#include <string>

namespace revmul {

namespace {

void require_params(const FamilyParams& params) {
  if (params.base < 2) {
    throw std::invalid_argument("family base must be at least 2, got " +
                                std::to_string(params.base));
  }
  if (params.a < 1 || params.a > params.base - 1) {
    throw std::invalid_argument("family parameter a must satisfy 1 <= a <= base-1, got a=" +
                                std::to_string(params.a));
  }
}

// Shared admissibility: a | (n-a) with k = (n-a)/a in the definitional range.
std::optional<int> family_k(const FamilyParams& params) {
  const int n = params.base, a = params.a;
  if ((n - a) % a != 0) return std::nullopt;
  const int k = (n - a) / a;
  if (k <= 1 || k >= n) return std::nullopt;
  return k;
}

}  // namespace

std::optional<Solution> family5(const FamilyParams& params) {
  require_params(params);
  const auto k = family_k(params);
  if (!k) return std::nullopt;
  const int n = params.base, a = params.a;
  return Solution{*k, DigitString(n, {a, a - 1, n - 1, n - a - 1, n - a})};
}

std::optional<Solution> family4(const FamilyParams& params) {
  require_params(params);
  const auto k = family_k(params);
  if (!k) return std::nullopt;
  const int n = params.base, a = params.a;
  return Solution{*k, DigitString(n, {a, a - 1, n - a - 1, n - a})};
}

std::vector<FamilyPair> family_all(int base) {
  if (base < 2) {
    throw std::invalid_argument("base must be at least 2, got " + std::to_string(base));
  }
  std::vector<FamilyPair> out;
  for (int a = 1; a < base; ++a) {
    const FamilyParams params{base, a};
    if (auto five = family5(params)) {
      out.push_back(FamilyPair{params, *family4(params), *five});
    }
  }
  return out;
}

std::pair<Solution, Solution> corollary_solutions(int base) {
  if (base < 3) {
    throw std::invalid_argument("corollary needs base >= 3, got " + std::to_string(base));
  }
  const FamilyParams params{base, 1};
  return {*family4(params), *family5(params)};
}

std::optional<FamilyParams> is_in_family(const Solution& sol) {
  const std::size_t len = sol.length();
  if (len != 4 && len != 5) {
    throw std::invalid_argument("is_in_family works on 4- or 5-digit solutions, got length " +
                                std::to_string(len));
  }
  const int a = sol.digits[0];
  if (a < 1 || a > sol.base() - 1) return std::nullopt;
  const FamilyParams params{sol.base(), a};
  const auto member = (len == 5) ? family5(params) : family4(params);
  if (member && member->digits == sol.digits && member->k == sol.k) return params;
  return std::nullopt;
}

}  // namespace revmul
