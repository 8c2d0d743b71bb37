#include <doctest.h>

#include "wrh/checks.hpp"
#include "wrh/digits.hpp"

using namespace wrh;

TEST_CASE("zero-term solutions by brute force") {
  CHECK(zero_term_solutions(kDecimal) == std::vector<Word>{0, 18, 99});
  CHECK(zero_term_solutions(Base(2)) == std::vector<Word>{0, 2, 3});
  CHECK(zero_term_solutions(Base(3)) == std::vector<Word>{0, 4, 8});
  CHECK(zero_term_solutions(Base(12)) == std::vector<Word>{0, 22, 143});
}

TEST_CASE("zero-term report lists the extra [(b-1)(b-1)]") {
  const auto rep = check_zero_term_theorem(kDecimal);
  CHECK(rep.count(Verdict::Pass) == 2);
  REQUIRE(rep.count(Verdict::Fail) == 1);
  CHECK(rep.counterexamples()[0].params == "b=10 N=99");
  CHECK_FALSE(check_zero_term_theorem(Base(2)).has_failures());
  CHECK_FALSE(check_zero_term_theorem(Base(3)).has_failures());
  for (int b = 4; b <= 12; ++b) {
    CHECK(check_zero_term_theorem(Base(b)).count(Verdict::Fail) == 1);
  }
}

TEST_CASE("bound audit on a small range") {
  const auto rep = check_bound_theorems(kDecimal, 10000);
  CHECK_FALSE(rep.has_failures());
  // 9999 has A = 1062 >= 10^3 so the logarithmic bound applies
  bool saw = false;
  for (const auto& inst : rep.instances) {
    saw = saw || inst.params == "b=10 N=9999";
  }
  CHECK(saw);
  CHECK(check_bound_theorems(kDecimal, 0).instances.empty());
}

TEST_CASE("digit inequalities") {
  const std::vector<Natural> sample{Natural(14), Natural(100), Natural(5), Natural("123456789012345678901")};
  const auto rep = check_digit_inequalities(Base(11), sample);
  CHECK_FALSE(rep.has_failures());
  bool found = false;
  for (const auto& inst : rep.instances) {
    if (inst.params == "b=11 N=14" && inst.detail.find("s_b(N^2)=16 > N") != std::string::npos) {
      found = inst.verdict == Verdict::NotApplicable;
    }
  }
  CHECK(found);
}

TEST_CASE("growth suite needs an even base") {
  CHECK_THROWS_AS(check_growth(Base(5), 1), InvalidParams);
  const auto rep = check_growth(Base(4), 1, 16);
  CHECK(rep.has_failures());
  CHECK(rep.count(Verdict::Pass) > 0);
}
