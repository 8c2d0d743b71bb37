#pragma once

#include <optional>
#include <vector>

#include "wrh/solvers.hpp"

namespace wrh {

struct InverseResult {
  Natural extra_term;
  Base base = kDecimal;
  Mode mode = Mode::AdditiveWeak;
  std::vector<Natural> instances;  // ascending
  Natural s_cap;                   // initial digit-sum cap
  Natural s_scanned;               // largest digit sum actually tried
  std::size_t tail_blocks = 0;     // digit-length blocks certified past s_cap
};

/// Every N that admits A as a weak-mode extra term.
///
/// For each candidate digit sum s, T = A + s fixes N = T + T^R (or T * T^R)
/// and N is kept iff s_b(N) = s. Candidates run over [1, s_cap] and the
/// rest of the range is then certified empty: grouped by the digit length d
/// of A + s, s_b(N) is at most (b-1)(d+1) (additive) or 2(b-1)d
/// (multiplicative), and any block where that bound is not already below
/// every s in it gets scanned too. Throws std::invalid_argument for RH modes.
InverseResult solve_extra_term(const Natural& extra_term, Base base, Mode mode);

std::vector<Natural> extra_term_instances(const Natural& extra_term, Base base, Mode mode);

/// Largest digit count of an N with this extra term as stated by the bound
/// results: A + 4 (additive); A + 4 for b >= 6 and A + 5 for b <= 5
/// (multiplicative, A >= 1). No stated bound for a multiplicative A = 0.
std::optional<Natural> stated_digit_bound(const Natural& extra_term, Base base, Mode mode);

}  // namespace wrh
