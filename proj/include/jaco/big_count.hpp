#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include "jaco/errors.hpp"

namespace jaco {

namespace detail {

template <typename Int> std::string int128_to_string(Int value) {
  if (value == 0)
    return "0";
  const bool negative = value < 0;
  std::string digits;
  while (value != 0) {
    int digit = static_cast<int>(value % 10);
    if (digit < 0)
      digit = -digit;
    digits.insert(digits.begin(), static_cast<char>('0' + digit));
    value /= 10;
  }
  if (negative)
    digits.insert(digits.begin(), '-');
  return digits;
}

} // namespace detail

class SignedCount;

// Exact nonnegative integer with 128-bit capacity. Every operation is
// overflow-checked and throws jaco::Overflow instead of wrapping.
class BigCount {
public:
  using value_type = unsigned __int128;

  constexpr BigCount() = default;
  constexpr BigCount(std::uint64_t value) : value_(value) {}

  static constexpr BigCount from_raw(value_type raw) {
    BigCount out;
    out.value_ = raw;
    return out;
  }

  constexpr value_type raw() const { return value_; }

  BigCount &operator+=(BigCount other) {
    value_type out;
    if (__builtin_add_overflow(value_, other.value_, &out))
      throw Overflow("BigCount addition overflow");
    value_ = out;
    return *this;
  }

  BigCount &operator*=(BigCount other) {
    value_type out;
    if (__builtin_mul_overflow(value_, other.value_, &out))
      throw Overflow("BigCount multiplication overflow");
    value_ = out;
    return *this;
  }

  // Throws when the result would be negative.
  BigCount &operator-=(BigCount other) {
    value_type out;
    if (__builtin_sub_overflow(value_, other.value_, &out))
      throw Overflow("BigCount subtraction underflow");
    value_ = out;
    return *this;
  }

  friend BigCount operator+(BigCount a, BigCount b) { return a += b; }
  friend BigCount operator*(BigCount a, BigCount b) { return a *= b; }
  friend BigCount operator-(BigCount a, BigCount b) { return a -= b; }

  friend constexpr bool operator==(BigCount, BigCount) = default;
  friend constexpr std::strong_ordering operator<=>(BigCount a, BigCount b) {
    return a.value_ <=> b.value_;
  }

  std::string to_string() const { return detail::int128_to_string(value_); }

  friend std::ostream &operator<<(std::ostream &os, BigCount value) {
    return os << value.to_string();
  }

private:
  value_type value_ = 0;
};

// Signed exact difference between two BigCount values.
class SignedCount {
public:
  using value_type = __int128;

  constexpr SignedCount() = default;
  constexpr SignedCount(std::int64_t value) : value_(value) {}

  constexpr value_type raw() const { return value_; }

  SignedCount &operator+=(SignedCount other) {
    value_type out;
    if (__builtin_add_overflow(value_, other.value_, &out))
      throw Overflow("SignedCount addition overflow");
    value_ = out;
    return *this;
  }
  friend SignedCount operator+(SignedCount a, SignedCount b) { return a += b; }

  friend constexpr bool operator==(SignedCount, SignedCount) = default;
  friend constexpr std::strong_ordering operator<=>(SignedCount a,
                                                    SignedCount b) {
    return a.value_ <=> b.value_;
  }

  std::string to_string() const { return detail::int128_to_string(value_); }

  friend std::ostream &operator<<(std::ostream &os, SignedCount value) {
    return os << value.to_string();
  }

  // a - b, exact.
  friend SignedCount difference(BigCount a, BigCount b);

private:
  value_type value_ = 0;
};

inline SignedCount difference(BigCount a, BigCount b) {
  SignedCount out;
  const auto limit = static_cast<BigCount::value_type>(
      ~static_cast<BigCount::value_type>(0) >> 1);
  if (a.raw() >= b.raw()) {
    const auto diff = a.raw() - b.raw();
    if (diff > limit)
      throw Overflow("SignedCount difference overflow");
    out.value_ = static_cast<SignedCount::value_type>(diff);
  } else {
    const auto diff = b.raw() - a.raw();
    if (diff > limit)
      throw Overflow("SignedCount difference overflow");
    out.value_ = -static_cast<SignedCount::value_type>(diff);
  }
  return out;
}

} // namespace jaco
