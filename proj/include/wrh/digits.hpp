#pragma once

// Base-b digit layer: radix conversion, digit sums, reversal, palindromes
// and the repeated-segment patterns used to describe number families.
//
// Every function is templated over Word (fast path for the scan kernels)
// and Natural (unbounded, for family members). Reversal works on values:
// trailing zeros of n become leading zeros of the reversal and vanish.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wrh/core.hpp"

namespace wrh {

template <class T>
concept Unsigned = std::same_as<T, Word> || std::same_as<T, Natural>;

/// Canonical base-b digit string, most significant digit first. Leading
/// zeros are stripped on construction; zero is the single digit [0].
class DigitString {
 public:
  DigitString(Base base, std::vector<int> digits);

  Base base() const noexcept { return base_; }
  const std::vector<int>& digits() const noexcept { return digits_; }
  std::size_t size() const noexcept { return digits_.size(); }
  int operator[](std::size_t i) const { return digits_[i]; }

  /// Rendering with 0-9A-Z.
  std::string str() const;

  friend bool operator==(const DigitString&, const DigitString&) = default;

 private:
  Base base_;
  std::vector<int> digits_;
};

char digit_char(int digit);

/// Parses a 0-9A-Z (case-insensitive) string. Throws DigitOutOfRange for a
/// character whose value is not below the base.
DigitString parse_digits(std::string_view text, Base base);

/// Raw digit sequence (most significant first, leading zeros allowed) to a
/// value. Throws DigitOutOfRange.
Natural from_digits(std::span<const int> digits, Base base);

namespace detail {

/// Least-significant-first digits; empty for zero.
template <Unsigned T>
std::vector<int> lsd_digits(T n, Base base) {
  std::vector<int> out;
  if constexpr (std::same_as<T, Word>) {
    const Word b = base.word();
    while (n != 0) {
      out.push_back(static_cast<int>(n % b));
      n /= b;
    }
  } else {
    const Natural b = base.value();
    Natural q;
    Natural r;
    while (n != 0) {
      boost::multiprecision::divide_qr(n, b, q, r);
      out.push_back(r.template convert_to<int>());
      n.swap(q);
    }
  }
  return out;
}

}  // namespace detail

template <Unsigned T>
DigitString to_digits(const T& n, Base base) {
  auto lsd = detail::lsd_digits(n, base);
  std::reverse(lsd.begin(), lsd.end());
  return DigitString(base, std::move(lsd));
}

template <Unsigned T = Natural>
T from_digits(const DigitString& d) {
  if constexpr (std::same_as<T, Natural>) {
    return from_digits(std::span<const int>(d.digits()), d.base());
  } else {
    Word value = 0;
    const Word b = d.base().word();
    for (int digit : d.digits()) {
      if (__builtin_mul_overflow(value, b, &value) ||
          __builtin_add_overflow(value, static_cast<Word>(digit), &value)) {
        throw std::overflow_error("digit string " + d.str() + " exceeds 64 bits");
      }
    }
    return value;
  }
}

template <Unsigned T>
std::size_t digit_count(T n, Base base) {
  if (n == 0) {
    return 1;
  }
  std::size_t count = 0;
  if constexpr (std::same_as<T, Word>) {
    const Word b = base.word();
    for (; n != 0; n /= b) {
      ++count;
    }
    return count;
  } else {
    return detail::lsd_digits(n, base).size();
  }
}

template <Unsigned T>
T digit_sum(T n, Base base) {
  if constexpr (std::same_as<T, Word>) {
    const Word b = base.word();
    Word sum = 0;
    for (; n != 0; n /= b) {
      sum += n % b;
    }
    return sum;
  } else {
    Natural sum = 0;
    for (int d : detail::lsd_digits(n, base)) {
      sum += d;
    }
    return sum;
  }
}

/// Value of the reversed digit string. The Word overload throws
/// std::overflow_error when the reversal does not fit in 64 bits.
template <Unsigned T>
T reverse_value(T n, Base base) {
  if constexpr (std::same_as<T, Word>) {
    const Word b = base.word();
    Word r = 0;
    for (; n != 0; n /= b) {
      if (__builtin_mul_overflow(r, b, &r) || __builtin_add_overflow(r, n % b, &r)) {
        throw std::overflow_error("reversal exceeds 64 bits");
      }
    }
    return r;
  } else {
    Natural r = 0;
    for (int d : detail::lsd_digits(n, base)) {
      r = r * base.value() + d;
    }
    return r;
  }
}

template <Unsigned T>
bool is_palindrome(const T& n, Base base) {
  const auto d = detail::lsd_digits(n, base);
  return std::equal(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(d.size() / 2), d.rbegin());
}

/// Digit string with repeated segments, e.g. 1 (0)^k (b-1) (b-1) (0)^k 1.
/// A repeat count of zero contributes nothing.
class Pattern {
 public:
  Pattern() = default;
  Pattern(std::initializer_list<int> digits);

  Pattern& digit(int d, std::size_t repeat = 1);
  Pattern& digits(std::span<const int> ds, std::size_t repeat = 1);
  Pattern& group(Pattern sub, std::size_t repeat);

  std::vector<int> expand() const;

 private:
  struct Segment {
    int digit = 0;
    std::vector<Pattern> sub;  // empty: plain digit
    std::size_t repeat = 1;
  };

  void expand_into(std::vector<int>& out) const;

  std::vector<Segment> segments_;
};

/// Value of the expanded pattern. Throws DigitOutOfRange.
Natural build(const Pattern& pattern, Base base);

}  // namespace wrh
