#pragma once

// Constructive number families and the claims attached to them.
//
// Generation never asserts a claim; every claimed witness or exclusion is
// carried alongside the member and checked by verify_family.
//
//   F1  [1 (0)^k (0)^k 1]_b                 claimed extra term b^(2k) - 2
//   F2  ([1 (0)^(k-1) 1]_b)^2               claimed extra term b^k - 1
//   F3  [1 (0)^k (b-1) (b-1) (0)^k 1]_b     wARH, digit sum 2b, not Niven
//   F4  [(b-1) (0)^k (b-1)]_b, k even       wARH, not MRH
//       [2 (0)^k 2 (0)^k 2]_3 for b = 3
//   F5  squares of palindromes, by base:    wMRH, not Niven, not MRH
//         b = 2:              ([1 (0)^k 1 (0)^k 1]_2)^2, digit sum 6
//         b even > 2:         ([1 (0)^k 1]_b)^2, digit sum 4
//         b odd, b%3 in {0,2}: ([1 (0)^k 1 (0)^k 1]_b)^2, k even, digit sum 9
//         b%3 == 1, b >= 11:  ([2 (0)^k 1 (0)^k 2]_b)^2, digit sum 24
//   F6  [I j j I^R]_b for j = 0..b-1        wARH, arithmetic progression
//   F7  [(1)^k]_b, b even, k = b^p          additive multipliers
//                                           k * [(1)^p I]_b, I in {0,1}^(k-2p)
//                                           with mirrored digits distinct;
//                                           at least 2^((k-2p)/2) of them
//   F8  [(1)^p (10)^(k-2p) 0 (1)^p]_b       extra terms 2([(1)^p I 0]_b - 1),
//       b even, k = b^p                     I a chain of k-2p blocks "0a",
//                                           mirrored nonzero digits sum to b;
//                                           exactly (b-1)^((k-2p)/2) of them

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wrh/claim_report.hpp"
#include "wrh/core.hpp"

namespace wrh {

enum class FamilyId { F1, F2, F3, F4, F5, F6, F7, F8 };

std::string_view family_name(FamilyId id);
FamilyId parse_family(std::string_view name);

struct FamilyParams {
  std::optional<std::size_t> k;        // first k (F1-F5); family minimum when unset
  std::optional<std::size_t> p;        // first p (F7, F8)
  std::optional<std::vector<int>> i;   // digit string I (F6), most significant first
};

struct FamilySpec {
  FamilyId id = FamilyId::F1;
  Base base = kDecimal;
  FamilyParams params;
  std::size_t claim_budget = 256;  // cap on enumerated claims per member (F7, F8)
};

enum class ClaimKind {
  WarhExtraTerm,     // value: A
  WmrhExtraTerm,     // value: A
  ArhMultiplier,     // value: M
  WarhMember,        // membership without a stated witness
  DigitSum,          // value: s_b(N)
  MinArhCount,       // value: lower bound on the number of ARH multipliers
  ExactWarhCount,    // value: number of wARH extra terms
  NotNiven,
  NotMrh,
  ProgressionStep,   // value: previous member, other: common difference
};

std::string_view claim_kind_name(ClaimKind kind);

struct FamilyClaim {
  ClaimKind kind = ClaimKind::WarhMember;
  Natural value = 0;
  Natural other = 0;
};

struct FamilyMember {
  std::string label;  // e.g. "F4 b=10 k=2"
  Natural n;
  std::vector<FamilyClaim> claims;
};

/// First `count` members in increasing parameter order. Throws
/// InvalidParams when the family's side conditions fail.
std::vector<FamilyMember> generate(const FamilySpec& spec, std::size_t count);

ClaimReport verify_family(const FamilySpec& spec, std::size_t count);

/// Checks one claim about n; params names the instance in the report.
ClaimInstance verify_claim(const FamilyMember& member, const FamilyClaim& claim, Base base);

/// Extra term built from the first half of a palindrome: for
/// n = [a_1..a_m a_m..a_1], A = [a_1..a_m (0)^m] - s_b(n); for odd length
/// with even middle digit c, A = [a_1..a_m (c/2) (0)^m] - s_b(n).
/// Throws NotEligible for non-palindromes, odd middle digits and single
/// nonzero digits (whose half-sum T is below s_b(n)).
Natural canonical_palindrome_witness(const Natural& n, Base base);

struct SquareWitness {
  Natural n;           // p^2
  Natural extra_term;  // p - s_b(p^2), returned as computed
};

/// Throws NotEligible unless p is a palindrome with at least two digits.
SquareWitness canonical_square_witness(const Natural& p, Base base);

/// T = A + s_b(n); returns T + T^R (or T * T^R) for comparison with n.
Natural additive_lhs(const Natural& n, const Natural& extra_term, Base base);
Natural multiplicative_lhs(const Natural& n, const Natural& extra_term, Base base);

}  // namespace wrh
