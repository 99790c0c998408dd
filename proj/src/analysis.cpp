#include "revmul/analysis.hpp"

#include <stdexcept>
#include <string>

namespace revmul {

namespace {

using Wide = __int128;  // signed scratch for the identity check

void require_length(const DigitString& d, std::size_t want, const char* who) {
  if (d.size() != want) {
    throw std::invalid_argument(std::string(who) + " requires exactly " + std::to_string(want) +
                                " digits, got " + std::to_string(d.size()));
  }
}

}  // namespace

bool is_prime(long long m) {
  if (m < 2) return false;
  for (long long i = 2; i * i <= m; ++i) {
    if (m % i == 0) return false;
  }
  return true;
}

long long alternating_sum(const DigitString& d) {
  require_length(d, 5, "alternating_sum");
  long long s = 0;
  for (std::size_t i = 0; i < 5; ++i) {
    s += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(d[i]);
  }
  return s;
}

FClassification f_class(const Solution& sol) {
  require_length(sol.digits, 5, "f_class");
  FClassification fc;
  fc.p = sol.base() + 1;
  fc.s = alternating_sum(sol.digits);
  fc.p_prime = is_prime(fc.p);
  if (fc.s % fc.p == 0) {
    fc.f = static_cast<int>(fc.s / fc.p);
  }
  // With p prime the divisibility argument plus the digit-range bound
  // -2p < s < 3p make f defined and in {-1,0,1,2}; anything else means the
  // inputs were not a genuine solution or the engine is broken.
  fc.anomaly = fc.p_prime && (!fc.f || *fc.f < -1 || *fc.f > 2);
  return fc;
}

DigitString delete_middle(const DigitString& d) {
  if (d.size() < 3 || d.size() % 2 == 0) {
    throw std::invalid_argument("delete_middle requires odd length >= 3, got " +
                                std::to_string(d.size()));
  }
  std::vector<int> digits = d.digits();
  digits.erase(digits.begin() + static_cast<std::ptrdiff_t>(digits.size() / 2));
  return DigitString(d.base(), std::move(digits));
}

namespace {

ProjectionOutcome project(const Solution& sol) {
  ProjectionOutcome out{delete_middle(sol.digits), false, std::nullopt, std::nullopt};
  // Two routes on purpose: same_k by direct multiplication, any_k through
  // check_solution; they must agree whenever both apply.
  const Value projected = value_of(out.projected);
  const Value reversal = value_of(reverse(out.projected));
  out.same_k_holds = checked_mul(projected, static_cast<Value>(sol.k)) == reversal;
  out.any_k = check_solution(out.projected);
  return out;
}

}  // namespace

ProjectionOutcome question1_check(const Solution& sol) {
  require_length(sol.digits, 5, "question1_check");
  ProjectionOutcome out = project(sol);
  out.source_f = f_class(sol);
  return out;
}

ProjectionOutcome kaczynski_project(const Solution& sol) {
  require_length(sol.digits, 3, "kaczynski_project");
  return project(sol);
}

bool derived_identity_check(const Solution& sol) {
  require_length(sol.digits, 5, "derived_identity_check");
  const FClassification fc = f_class(sol);
  if (!fc.f) {
    throw std::invalid_argument("derived_identity_check requires a defined f (p | s)");
  }
  const Wide n = sol.base();
  const Wide a = sol.digits[0], b = sol.digits[1], d = sol.digits[3], e = sol.digits[4];
  const Wide f = *fc.f;
  const Wide lhs = static_cast<Wide>(sol.k) *
                   (a * n * n * n + (b - a + f) * n * n + (d - e) * n + e);
  const Wide rhs = e * n * n * n + (d - e + f) * n * n + (b - a) * n + a;
  return lhs == rhs;
}

}  // namespace revmul
