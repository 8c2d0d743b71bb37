#include <doctest.h>

#include "oracle.hpp"
#include "wrh/reference.hpp"
#include "wrh/solvers.hpp"

using namespace wrh;

namespace {
std::vector<Word> w(Word n, Mode m, int b = 10) { return witnesses(n, Base(b), m).witnesses; }
}  // namespace

TEST_CASE("mode names") {
  for (Mode m : kAllModes) {
    CHECK(parse_mode(mode_name(m)) == m);
  }
  CHECK_THROWS_AS(parse_mode("xyz"), std::invalid_argument);
  ModeSet s{Mode::AdditiveRH};
  CHECK(s.contains(Mode::AdditiveRH));
  CHECK_FALSE(s.contains(Mode::AdditiveWeak));
  CHECK(ModeSet{}.empty());
}

TEST_CASE("additive weak examples") {
  CHECK(w(12, Mode::AdditiveWeak) == std::vector<Word>{3});
  CHECK(w(99, Mode::AdditiveWeak) == std::vector<Word>{0, 9, 18, 27, 36, 45, 54, 63, 72});
  CHECK(w(0, Mode::AdditiveWeak) == std::vector<Word>{0});
  CHECK(w(13, Mode::AdditiveWeak).empty());
  CHECK(warh_witnesses(121212, kDecimal).contains(60597));
  CHECK(warh_witnesses(4554, kDecimal).contains(4482));
  CHECK(warh_witnesses(4554, kDecimal).contains(1035));
}

TEST_CASE("multiplicative weak examples") {
  CHECK(w(2268, Mode::MultiplicativeWeak) == std::vector<Word>{18, 45});
  CHECK(w(252, Mode::MultiplicativeWeak) == std::vector<Word>{3, 12});
  CHECK(w(403, Mode::MultiplicativeWeak) == std::vector<Word>{6, 24});
  CHECK(w(736, Mode::MultiplicativeWeak) == std::vector<Word>{7, 16});
  CHECK(w(63504, Mode::MultiplicativeWeak) == std::vector<Word>{126, 234, 423});
  CHECK(w(1729, Mode::MultiplicativeWeak) == std::vector<Word>{0, 72});
  CHECK(w(0, Mode::MultiplicativeWeak) == std::vector<Word>{0});
  CHECK(w(1, Mode::MultiplicativeWeak) == std::vector<Word>{0});
  CHECK(multiplicity(63504, kDecimal, Mode::MultiplicativeWeak) == 3);
}

TEST_CASE("RH multipliers") {
  CHECK(w(10, Mode::MultiplicativeRH) == std::vector<Word>{10});
  CHECK(w(0, Mode::AdditiveRH).empty());
  CHECK(w(0, Mode::MultiplicativeRH).empty());
  std::vector<Word> arh;
  for (Word n = 0; arh.size() < 5; ++n) {
    if (!w(n, Mode::AdditiveRH).empty()) {
      arh.push_back(n);
    }
  }
  CHECK(arh == std::vector<Word>{10, 11, 12, 18, 22});
}

TEST_CASE("niven") {
  CHECK(is_niven(0, kDecimal));
  CHECK(is_niven(2268, kDecimal));
  CHECK_FALSE(is_niven(109901, kDecimal));
  CHECK_FALSE(is_niven(11, kDecimal));
}

TEST_CASE("divisibility exclusion for MRH") {
  // 33: s = 6, s*gcd(6,9) = 18 does not divide 33
  CHECK(mrh_excluded_by_divisibility(Natural(33), kDecimal));
  CHECK_FALSE(mrh_excluded_by_divisibility(Natural(10), kDecimal));
  for (Word n = 1; n < 5000; ++n) {
    if (mrh_excluded_by_divisibility(Natural(n), kDecimal)) {
      CHECK(mrh_multipliers(n, kDecimal).empty());
    }
  }
}

TEST_CASE("classify with a mode subset leaves the rest empty") {
  const auto full = classify(2268, kDecimal);
  const auto part = classify(2268, kDecimal, ModeSet{Mode::MultiplicativeWeak});
  CHECK(part.wmrh_terms == full.wmrh_terms);
  CHECK(part.warh_terms.empty());
  CHECK(part.digit_sum == 18);
  CHECK(part.is_niven);
  CHECK_FALSE(part.is_palindrome);
}

TEST_CASE("preimage solvers agree with the sieve in several bases") {
  for (int b : {2, 3, 7, 10, 16, 36}) {
    const oracle::Sieve sieve(20000, static_cast<Word>(b));
    for (Word n = 0; n <= 20000; ++n) {
      REQUIRE(sum_preimages(n, Base(b)) == sieve.sums[n]);
      REQUIRE(product_preimages(n, Base(b)) == sieve.products[n]);
    }
  }
}

TEST_CASE("literal scans agree on small n") {
  for (int b : {2, 5, 10}) {
    for (Word n = 0; n <= 600; ++n) {
      for (Mode m : kAllModes) {
        REQUIRE(reference::witnesses_scan(n, Base(b), m) == witnesses(n, Base(b), m));
      }
    }
  }
}

TEST_CASE("large words") {
  // column sums 1 1 0 ... 0 1 1: few preimages
  const Word n = 110000000000000011ULL;
  const auto sums = sum_preimages(n, kDecimal);
  CHECK_FALSE(sums.empty());
  for (Word t : sums) {
    CHECK(t + oracle::rev(t, 10) == n);
  }
  CHECK(product_preimages(1000000007ULL, kDecimal).empty());
}
