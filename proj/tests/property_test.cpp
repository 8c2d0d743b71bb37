#include <doctest.h>

#include <limits>
#include <random>

#include "oracle.hpp"
#include "wrh/digits.hpp"
#include "wrh/families.hpp"
#include "wrh/inverse.hpp"
#include "wrh/solvers.hpp"

using namespace wrh;

namespace {

std::mt19937_64& rng() {
  static std::mt19937_64 g(20181);
  return g;
}

int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

}  // namespace

TEST_CASE("digit roundtrip and reversal involution") {
  for (int i = 0; i < 20000; ++i) {
    const Base b(uniform(2, 36));
    const Word n = rng()() >> uniform(1, 63);
    CHECK(from_digits<Word>(to_digits(n, b)) == n);
    CHECK(digit_sum(n, b) == oracle::dsum(n, b.word()));
    if (n % b.word() != 0 && n < (Word{1} << 50)) {
      CHECK(reverse_value(reverse_value(n, b), b) == n);
    }
    CHECK(is_palindrome(n, b) == (n == oracle::rev(n, b.word())));
  }
}

TEST_CASE("word and bignum paths agree") {
  for (int i = 0; i < 5000; ++i) {
    const Base b(uniform(2, 36));
    const Word n = rng()() >> uniform(8, 63);
    const Natural big(n);
    CHECK(Natural(digit_sum(n, b)) == digit_sum(big, b));
    CHECK(digit_count(n, b) == digit_count(big, b));
    CHECK(to_digits(n, b) == to_digits(big, b));
  }
}

TEST_CASE("witness sets satisfy their equations") {
  for (int i = 0; i < 3000; ++i) {
    const Base b(uniform(2, 16));
    const Word n = rng()() % 5000000;
    const auto rec = classify(n, b);
    const Word s = rec.digit_sum;
    for (Word a : rec.warh_terms.witnesses) {
      CHECK((a + s) + oracle::rev(a + s, b.word()) == n);
    }
    for (Word a : rec.wmrh_terms.witnesses) {
      CHECK((a + s) * oracle::rev(a + s, b.word()) == n);
    }
    for (Word m : rec.arh_multipliers.witnesses) {
      CHECK(m * s + oracle::rev(m * s, b.word()) == n);
    }
    for (Word m : rec.mrh_multipliers.witnesses) {
      CHECK(m * s * oracle::rev(m * s, b.word()) == n);
    }
    if (!rec.mrh_multipliers.empty()) {
      CHECK(rec.is_niven);
    }
  }
}

TEST_CASE("random extra terms: instances and witnesses agree") {
  for (int i = 0; i < 200; ++i) {
    const Base b(uniform(2, 12));
    const Word a = static_cast<Word>(uniform(0, 3000));
    for (Mode mode : {Mode::AdditiveWeak, Mode::MultiplicativeWeak}) {
      for (const auto& n : extra_term_instances(a, b, mode)) {
        REQUIRE(n < Natural(std::numeric_limits<Word>::max()));
        CHECK(witnesses(n.convert_to<Word>(), b, mode).contains(a));
      }
    }
  }
}

TEST_CASE("canonical palindrome witness on random long palindromes") {
  for (int i = 0; i < 2000; ++i) {
    const Base b(uniform(2, 36));
    const int half = uniform(1, 15);
    std::vector<int> d;
    d.push_back(uniform(1, b.value() - 1));
    for (int j = 1; j < half; ++j) {
      d.push_back(uniform(0, b.value() - 1));
    }
    std::vector<int> full = d;
    if (uniform(0, 1) == 1) {
      full.push_back(2 * uniform(0, (b.value() - 1) / 2));
    }
    full.insert(full.end(), d.rbegin(), d.rend());
    const Natural n = from_digits(full, b);
    const Natural a = canonical_palindrome_witness(n, b);
    CHECK(a >= 0);
    CHECK(additive_lhs(n, a, b) == n);
  }
}
