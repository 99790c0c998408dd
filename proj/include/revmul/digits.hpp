#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace revmul {

// Exact unsigned value of a digit string. 128 bits cover every base/length
// this tool supports (n <= 2^16, L <= 7 stays below 2^112); anything wider
// raises capacity_error instead of wrapping.
using Value = unsigned __int128;

// Arithmetic-capacity failure: a computation does not fit in Value.
class capacity_error : public std::runtime_error {
 public:
  explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

Value checked_add(Value a, Value b);
Value checked_mul(Value a, Value b);
Value checked_pow(Value base, unsigned exp);

std::string to_string(Value v);
Value parse_value(const std::string& text);  // decimal only

// Base-n digit sequence, most significant digit first.
//
// Invariants enforced here: base >= 2, length >= 1, 0 <= digit < base.
// End digits may be zero (digits_of pads with leading zeros); strings with a
// zero end digit simply never pass check_solution.
class DigitString {
 public:
  DigitString(int base, std::vector<int> digits);

  int base() const { return base_; }
  const std::vector<int>& digits() const { return digits_; }
  std::size_t size() const { return digits_.size(); }
  int front() const { return digits_.front(); }
  int back() const { return digits_.back(); }
  int operator[](std::size_t i) const { return digits_[i]; }

  friend bool operator==(const DigitString& a, const DigitString& b) = default;

 private:
  int base_;
  std::vector<int> digits_;
};

std::ostream& operator<<(std::ostream& os, const DigitString& d);

// Positional value, MSB first. Throws capacity_error on 128-bit overflow.
Value value_of(const DigitString& d);

// Digit sequence reversed; base and length unchanged.
DigitString reverse(const DigitString& d);

// MSB-first base-n expansion of x, left-padded with zeros to min_width.
DigitString digits_of(Value x, int base, std::size_t min_width = 1);

// If reverse(d) = k * d for an integer 1 < k < base and both end digits of d
// are nonzero, returns k. Palindromes (k = 1) and k >= base are rejected here
// so the definitional constraint lives in one place.
std::optional<int> check_solution(const DigitString& d);

// A multiplicand whose exact digit reversal is k times itself.
struct Solution {
  int k;
  DigitString digits;

  int base() const { return digits.base(); }
  std::size_t length() const { return digits.size(); }
  Value value() const { return value_of(digits); }
  Value reversal() const { return value_of(reverse(digits)); }

  friend bool operator==(const Solution& a, const Solution& b) = default;
};

std::ostream& operator<<(std::ostream& os, const Solution& s);

// check_solution packaged as a Solution, when it holds.
std::optional<Solution> to_solution(const DigitString& d);

}  // namespace revmul
