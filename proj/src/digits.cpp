#include "revmul/digits.hpp"

#include <algorithm>
#include <ostream>

namespace revmul {

Value checked_add(Value a, Value b) {
  Value out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw capacity_error("addition exceeds 128-bit capacity");
  }
  return out;
}

Value checked_mul(Value a, Value b) {
  Value out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw capacity_error("multiplication exceeds 128-bit capacity");
  }
  return out;
}

Value checked_pow(Value base, unsigned exp) {
  Value out = 1;
  for (unsigned i = 0; i < exp; ++i) {
    out = checked_mul(out, base);
  }
  return out;
}

std::string to_string(Value v) {
  if (v == 0) return "0";
  std::string out;
  while (v > 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

Value parse_value(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty number");
  Value v = 0;
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("not a decimal number: '" + text + "'");
    }
    v = checked_add(checked_mul(v, 10), static_cast<Value>(c - '0'));
  }
  return v;
}

DigitString::DigitString(int base, std::vector<int> digits)
    : base_(base), digits_(std::move(digits)) {
  if (base_ < 2) {
    throw std::invalid_argument("base must be at least 2, got " + std::to_string(base_));
  }
  if (digits_.empty()) {
    throw std::invalid_argument("digit string must have at least one digit");
  }
  for (int d : digits_) {
    if (d < 0 || d >= base_) {
      throw std::invalid_argument("digit " + std::to_string(d) + " out of range for base " +
                                  std::to_string(base_));
    }
  }
}

std::ostream& operator<<(std::ostream& os, const DigitString& d) {
  os << '(';
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i > 0) os << ',';
    os << d[i];
  }
  return os << ")_" << d.base();
}

std::ostream& operator<<(std::ostream& os, const Solution& s) {
  return os << s.k << '*' << s.digits;
}

Value value_of(const DigitString& d) {
  Value v = 0;
  for (int digit : d.digits()) {
    v = checked_add(checked_mul(v, static_cast<Value>(d.base())), static_cast<Value>(digit));
  }
  return v;
}

DigitString reverse(const DigitString& d) {
  std::vector<int> digits(d.digits().rbegin(), d.digits().rend());
  return DigitString(d.base(), std::move(digits));
}

DigitString digits_of(Value x, int base, std::size_t min_width) {
  if (base < 2) {
    throw std::invalid_argument("base must be at least 2, got " + std::to_string(base));
  }
  std::vector<int> digits;
  const auto b = static_cast<Value>(base);
  while (x > 0) {
    digits.push_back(static_cast<int>(x % b));
    x /= b;
  }
  while (digits.size() < std::max<std::size_t>(min_width, 1)) {
    digits.push_back(0);
  }
  std::reverse(digits.begin(), digits.end());
  return DigitString(base, std::move(digits));
}

std::optional<int> check_solution(const DigitString& d) {
  if (d.front() == 0 || d.back() == 0) return std::nullopt;
  const Value x = value_of(d);
  const Value r = value_of(reverse(d));
  if (r % x != 0) return std::nullopt;
  const Value k = r / x;
  if (k <= 1 || k >= static_cast<Value>(d.base())) return std::nullopt;
  return static_cast<int>(k);
}

std::optional<Solution> to_solution(const DigitString& d) {
  if (auto k = check_solution(d)) {
    return Solution{*k, d};
  }
  return std::nullopt;
}

}  // namespace revmul
