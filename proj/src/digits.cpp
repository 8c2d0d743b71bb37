#include "wrh/digits.hpp"

#include <cctype>

namespace wrh {

namespace {

void check_digit(int d, Base base) {
  if (d < 0 || d >= base.value()) {
    throw DigitOutOfRange("digit " + std::to_string(d) + " out of range for base " +
                          std::to_string(base.value()));
  }
}

}  // namespace

DigitString::DigitString(Base base, std::vector<int> digits) : base_(base), digits_(std::move(digits)) {
  for (int d : digits_) {
    check_digit(d, base_);
  }
  auto first = std::find_if(digits_.begin(), digits_.end(), [](int d) { return d != 0; });
  digits_.erase(digits_.begin(), first);
  if (digits_.empty()) {
    digits_.push_back(0);
  }
}

std::string DigitString::str() const {
  std::string out;
  out.reserve(digits_.size());
  for (int d : digits_) {
    out.push_back(digit_char(d));
  }
  return out;
}

char digit_char(int digit) {
  if (digit < 0 || digit >= Base::kMax) {
    throw DigitOutOfRange("no character for digit " + std::to_string(digit));
  }
  return digit < 10 ? static_cast<char>('0' + digit) : static_cast<char>('A' + digit - 10);
}

DigitString parse_digits(std::string_view text, Base base) {
  if (text.empty()) {
    throw DigitOutOfRange("empty digit string");
  }
  std::vector<int> digits;
  digits.reserve(text.size());
  for (char c : text) {
    const auto u = static_cast<unsigned char>(c);
    int d = Base::kMax;
    if (std::isdigit(u)) {
      d = c - '0';
    } else if (std::isalpha(u)) {
      d = std::toupper(u) - 'A' + 10;
    }
    if (d >= base.value()) {
      throw DigitOutOfRange(std::string("character '") + c + "' is not a base-" +
                            std::to_string(base.value()) + " digit");
    }
    digits.push_back(d);
  }
  return DigitString(base, std::move(digits));
}

Natural from_digits(std::span<const int> digits, Base base) {
  Natural value = 0;
  for (int d : digits) {
    check_digit(d, base);
    value *= base.value();
    value += d;
  }
  return value;
}

Pattern::Pattern(std::initializer_list<int> digits) {
  for (int d : digits) {
    digit(d);
  }
}

Pattern& Pattern::digit(int d, std::size_t repeat) {
  segments_.push_back(Segment{d, {}, repeat});
  return *this;
}

Pattern& Pattern::digits(std::span<const int> ds, std::size_t repeat) {
  Pattern sub;
  for (int d : ds) {
    sub.digit(d);
  }
  return group(std::move(sub), repeat);
}

Pattern& Pattern::group(Pattern sub, std::size_t repeat) {
  Segment seg;
  seg.sub.push_back(std::move(sub));
  seg.repeat = repeat;
  segments_.push_back(std::move(seg));
  return *this;
}

void Pattern::expand_into(std::vector<int>& out) const {
  for (const auto& seg : segments_) {
    for (std::size_t i = 0; i < seg.repeat; ++i) {
      if (seg.sub.empty()) {
        out.push_back(seg.digit);
      } else {
        seg.sub.front().expand_into(out);
      }
    }
  }
}

std::vector<int> Pattern::expand() const {
  std::vector<int> out;
  expand_into(out);
  return out;
}

Natural build(const Pattern& pattern, Base base) {
  const auto digits = pattern.expand();
  return from_digits(std::span<const int>(digits), base);
}

}  // namespace wrh
