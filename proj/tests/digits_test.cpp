#include <doctest.h>

#include "wrh/digits.hpp"

using namespace wrh;

TEST_CASE("base range") {
  CHECK_THROWS_AS(Base(1), InvalidBase);
  CHECK_THROWS_AS(Base(37), InvalidBase);
  CHECK(Base(36).value() == 36);
  CHECK(Base(2) < Base(3));
}

TEST_CASE("digit strings are canonical") {
  const DigitString d(Base(10), {0, 0, 1, 2});
  CHECK(d.digits() == std::vector<int>{1, 2});
  CHECK(DigitString(Base(10), {}).digits() == std::vector<int>{0});
  CHECK(DigitString(Base(10), {0, 0}).str() == "0");
  CHECK_THROWS_AS(DigitString(Base(10), {1, 10}), DigitOutOfRange);
  CHECK_THROWS_AS(DigitString(Base(2), {-1}), DigitOutOfRange);
}

TEST_CASE("parse and render") {
  CHECK(parse_digits("ff", Base(16)).str() == "FF");
  CHECK(from_digits<Word>(parse_digits("zz", Base(36))) == 36 * 36 - 1);
  CHECK_THROWS_AS(parse_digits("12", Base(2)), DigitOutOfRange);
  CHECK_THROWS_AS(parse_digits("1-", Base(10)), DigitOutOfRange);
  CHECK(to_digits(Word{255}, Base(2)).str() == "11111111");
  CHECK(to_digits(Natural(0), Base(7)).str() == "0");
}

TEST_CASE("from_digits overflow") {
  const std::vector<int> big(25, 9);
  CHECK(from_digits(big, kDecimal) == Natural("9999999999999999999999999"));
  CHECK_THROWS_AS(from_digits<Word>(DigitString(kDecimal, big)), std::overflow_error);
}

TEST_CASE("digit count, sum, reversal") {
  CHECK(digit_count(Word{0}, kDecimal) == 1);
  CHECK(digit_count(Word{9999}, kDecimal) == 4);
  CHECK(digit_count(Word{10000}, kDecimal) == 5);
  CHECK(digit_sum(Word{2268}, kDecimal) == 18);
  CHECK(digit_sum(Word{0}, kDecimal) == 0);
  CHECK(digit_sum(Natural(196), Base(11)) == 16);
  // trailing zeros vanish
  CHECK(reverse_value(Word{1200}, kDecimal) == 21);
  CHECK(reverse_value(Word{10}, kDecimal) == 1);
  CHECK(reverse_value(Word{6}, Base(2)) == 3);
  CHECK(reverse_value(Natural("12345678901234567890123"), kDecimal) == Natural("32109876543210987654321"));
  CHECK_THROWS_AS(reverse_value(Word{18446744073709551609ULL}, kDecimal), std::overflow_error);
}

TEST_CASE("palindromes") {
  CHECK(is_palindrome(Word{0}, kDecimal));
  CHECK(is_palindrome(Word{7}, kDecimal));
  CHECK(is_palindrome(Word{4554}, kDecimal));
  CHECK_FALSE(is_palindrome(Word{10}, kDecimal));
  CHECK(is_palindrome(Word{5}, Base(2)));  // 101
  CHECK_FALSE(is_palindrome(Word{6}, Base(2)));
}

TEST_CASE("patterns") {
  CHECK(build(Pattern{}.digit(1).digit(0, 2).digit(1), kDecimal) == 1001);
  CHECK(build(Pattern{}.digit(1).digit(0, 0).digit(1), kDecimal) == 11);
  CHECK(build(Pattern{}.group(Pattern{1, 0}, 3), kDecimal) == 101010);
  CHECK(build(Pattern{9, 9}, kDecimal) == 99);
  CHECK_THROWS_AS(build(Pattern{2}, Base(2)), DigitOutOfRange);
  CHECK(Pattern{}.expand().empty());
}
