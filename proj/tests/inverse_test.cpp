#include <doctest.h>

#include "oracle.hpp"
#include "wrh/inverse.hpp"

using namespace wrh;

namespace {
std::vector<Natural> nat(std::initializer_list<int> v) { return {v.begin(), v.end()}; }
}  // namespace

TEST_CASE("known instance sets") {
  CHECK(extra_term_instances(4, kDecimal, Mode::AdditiveWeak) == nat({10, 55}));
  CHECK(extra_term_instances(2, kDecimal, Mode::AdditiveWeak) == nat({14, 77}));
  CHECK(extra_term_instances(2, kDecimal, Mode::MultiplicativeWeak).empty());
  CHECK(extra_term_instances(7, kDecimal, Mode::MultiplicativeWeak) == nat({121, 736, 1207, 2668}));
}

TEST_CASE("zero extra term includes N = 0") {
  const auto add = extra_term_instances(0, kDecimal, Mode::AdditiveWeak);
  CHECK(add == nat({0, 18, 99}));
  const auto mul = extra_term_instances(0, kDecimal, Mode::MultiplicativeWeak);
  REQUIRE_FALSE(mul.empty());
  CHECK(mul.front() == 0);
  CHECK(std::find(mul.begin(), mul.end(), Natural(1729)) != mul.end());
}

TEST_CASE("argument errors") {
  CHECK_THROWS_AS(solve_extra_term(1, kDecimal, Mode::AdditiveRH), std::invalid_argument);
  CHECK_THROWS_AS(solve_extra_term(-1, kDecimal, Mode::AdditiveWeak), std::invalid_argument);
}

TEST_CASE("stated digit bound") {
  CHECK(*stated_digit_bound(2, kDecimal, Mode::AdditiveWeak) == 6);
  CHECK(*stated_digit_bound(2, kDecimal, Mode::MultiplicativeWeak) == 6);
  CHECK(*stated_digit_bound(2, Base(5), Mode::MultiplicativeWeak) == 7);
  CHECK_FALSE(stated_digit_bound(0, kDecimal, Mode::MultiplicativeWeak).has_value());
}

TEST_CASE("instances cover the sieve for small N") {
  // Every N <= 20000 with extra term A <= 40 must show up, and nothing else
  // below 20000 may.
  for (int b : {2, 3, 10}) {
    const oracle::Sieve sieve(20000, static_cast<Word>(b));
    for (bool additive : {true, false}) {
      const Mode mode = additive ? Mode::AdditiveWeak : Mode::MultiplicativeWeak;
      for (Word a = 0; a <= 40; ++a) {
        std::vector<Natural> expected;
        for (Word n = 0; n <= 20000; ++n) {
          const auto ws = sieve.weak(n, additive);
          if (std::find(ws.begin(), ws.end(), a) != ws.end()) {
            expected.emplace_back(n);
          }
        }
        std::vector<Natural> got;
        for (const auto& n : extra_term_instances(a, Base(b), mode)) {
          if (n <= 20000) {
            got.push_back(n);
          }
        }
        CAPTURE(b);
        CAPTURE(a);
        CAPTURE(additive);
        REQUIRE(got == expected);
      }
    }
  }
}
