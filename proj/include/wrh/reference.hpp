#pragma once

// Literal, unpruned scans straight from the class definitions. They cost
// O(n) per number and exist to check the fast solvers and for the
// benchmark; nothing in the library calls them.

#include "wrh/solvers.hpp"

namespace wrh::reference {

/// Scans every T in [max(s,1), n] (T = 0 only for n = 0).
WitnessSet warh_witnesses_scan(Word n, Base base);

/// Scans every T in [1, n] for T * T^R = n.
WitnessSet wmrh_witnesses_scan(Word n, Base base);

/// Scans M = 1 .. n/s.
WitnessSet arh_multipliers_scan(Word n, Base base);
WitnessSet mrh_multipliers_scan(Word n, Base base);

WitnessSet witnesses_scan(Word n, Base base, Mode mode);

ClassificationRecord classify_scan(Word n, Base base, ModeSet modes);

}  // namespace wrh::reference
