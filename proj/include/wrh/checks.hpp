#pragma once

// Computational audits of the stated digit-count bounds and digit-sum
// inequalities. Each returns a ClaimReport; nothing is assumed to hold.

#include <span>
#include <vector>

#include "wrh/claim_report.hpp"
#include "wrh/core.hpp"

namespace wrh {

/// The wARH numbers with extra term 0 as stated:
/// 0, [1(b-2)]_b, plus [11]_2 for b = 2 and [22]_3 for b = 3.
std::vector<Word> claimed_zero_term_set(Base base);

/// Every N with at most four base-b digits and s + s^R = N (s = s_b(N)),
/// i.e. the extra-term-0 solutions within the A + 4 digit bound.
std::vector<Word> zero_term_solutions(Base base);

/// Compares zero_term_solutions against claimed_zero_term_set: one pass
/// line per agreeing number, one fail per extra or missing number.
ClaimReport check_zero_term_theorem(Base base);

/// For every N < n_limit and each of its weak extra terms A, with k the
/// digit count of N:
///   warh-digits-le-A+4       k <= A + 4
///   warh-digits-le-2log      k <= 2 floor(log_b A)        (A >= b^3)
///   wmrh-digits-le-A+4or5    k <= A + 4 (b >= 6), A + 5   (A >= 1)
///   wmrh-digits-le-3log      k <= 3 floor(log_b A)        (A >= b^3, or b = 2 and A >= 4)
/// floor(log_b A) is digits_b(A) - 1. One instance per claim and N that has
/// an applicable witness.
ClaimReport check_bound_theorems(Base base, Word n_limit, int workers = 1);

/// Per sample value:
///   digit-sum-half      2 s_b(N) <= N                       (>= 2 digits)
///   digit-sum-scaled    2 s_b(N) + b - 1 <= N b + (b-1)/2   (>= 2 digits)
///   square-digit-sum    s_b(N^2) <= N                       (>= 3 digits)
/// Shorter N are reported not-applicable with the actual values.
ClaimReport check_digit_inequalities(Base base, std::span<const Natural> sample);

/// F7 and F8 verified for p = 1 .. p_count (even bases only).
ClaimReport check_growth(Base base, std::size_t p_count, std::size_t claim_budget = 256);

}  // namespace wrh
