#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace wrh {

/// Unbounded integer used wherever values can outgrow a machine word
/// (family members, inverse-solver output). Callers keep it nonnegative.
using Natural = boost::multiprecision::cpp_int;

/// Fixed-width integer used by the enumeration kernels.
using Word = std::uint64_t;

struct DigitOutOfRange : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidBase : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Input does not have the shape a construction requires.
struct NotEligible : std::domain_error {
  using std::domain_error::domain_error;
};

struct InvalidParams : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class FormatError : public std::runtime_error {
 public:
  FormatError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Numeration base, 2 through 36 so every digit has a single-character
/// rendering (0-9, A-Z).
class Base {
 public:
  static constexpr int kMin = 2;
  static constexpr int kMax = 36;

  constexpr explicit Base(int value) : value_(value) {
    if (value < kMin || value > kMax) {
      throw InvalidBase("base must be in [2, 36], got " + std::to_string(value));
    }
  }

  constexpr int value() const noexcept { return value_; }
  constexpr Word word() const noexcept { return static_cast<Word>(value_); }

  friend constexpr bool operator==(Base, Base) = default;
  friend constexpr auto operator<=>(Base, Base) = default;

 private:
  int value_;
};

inline constexpr Base kDecimal{10};

}  // namespace wrh
