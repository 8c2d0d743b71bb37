#pragma once

// Witness enumeration for the four Ramanujan-Hardy classes.
//
// With s = s_b(n) and T the "sum" term:
//   additive weak (wARH):        T = A + s,  T + T^R = n,  A >= 0
//   multiplicative weak (wMRH):  T = A + s,  T * T^R = n,  A >= 0
//   additive RH (ARH):           T = M * s,  T + T^R = n,  M >= 1
//   multiplicative RH (MRH):     T = M * s,  T * T^R = n,  M >= 1
//
// All four reduce to "find every T with T + T^R = n" or "every T with
// T * T^R = n" followed by a filter on T, which is how they are solved.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "wrh/core.hpp"

namespace wrh {

enum class Mode : std::uint8_t { AdditiveWeak, MultiplicativeWeak, AdditiveRH, MultiplicativeRH };

inline constexpr Mode kAllModes[] = {Mode::AdditiveWeak, Mode::MultiplicativeWeak, Mode::AdditiveRH,
                                     Mode::MultiplicativeRH};

/// Short names used on the command line and in stores: warh, wmrh, arh, mrh.
std::string_view mode_name(Mode mode);
Mode parse_mode(std::string_view name);

constexpr bool is_weak(Mode m) { return m == Mode::AdditiveWeak || m == Mode::MultiplicativeWeak; }
constexpr bool is_additive(Mode m) { return m == Mode::AdditiveWeak || m == Mode::AdditiveRH; }

/// Set of modes as a bitmask.
class ModeSet {
 public:
  constexpr ModeSet() = default;
  constexpr ModeSet(std::initializer_list<Mode> modes) {
    for (Mode m : modes) {
      insert(m);
    }
  }

  static constexpr ModeSet all() { return {Mode::AdditiveWeak, Mode::MultiplicativeWeak, Mode::AdditiveRH, Mode::MultiplicativeRH}; }

  constexpr void insert(Mode m) { bits_ |= bit(m); }
  constexpr bool contains(Mode m) const { return (bits_ & bit(m)) != 0; }
  constexpr bool empty() const { return bits_ == 0; }

  friend constexpr bool operator==(ModeSet, ModeSet) = default;

 private:
  static constexpr std::uint8_t bit(Mode m) { return static_cast<std::uint8_t>(1U << static_cast<unsigned>(m)); }
  std::uint8_t bits_ = 0;
};

/// Witnesses of n in one mode: extra terms A for the weak modes,
/// multipliers M for the RH modes. Strictly increasing.
struct WitnessSet {
  Word n = 0;
  Base base = kDecimal;
  Mode mode = Mode::AdditiveWeak;
  std::vector<Word> witnesses;

  bool empty() const noexcept { return witnesses.empty(); }
  std::size_t size() const noexcept { return witnesses.size(); }
  bool contains(Word w) const;

  friend bool operator==(const WitnessSet&, const WitnessSet&) = default;
};

struct ClassificationRecord {
  Word n = 0;
  Base base = kDecimal;
  Word digit_sum = 0;
  bool is_palindrome = false;
  bool is_niven = false;
  WitnessSet warh_terms;
  WitnessSet wmrh_terms;
  WitnessSet arh_multipliers;
  WitnessSet mrh_multipliers;

  const WitnessSet& witnesses(Mode mode) const;
  WitnessSet& witnesses(Mode mode);

  friend bool operator==(const ClassificationRecord&, const ClassificationRecord&) = default;
};

/// Every T >= 0 with T + T^R = n, ascending.
std::vector<Word> sum_preimages(Word n, Base base);

/// Every T >= 1 with T * T^R = n (n >= 1), ascending. Empty for n = 0.
std::vector<Word> product_preimages(Word n, Base base);

WitnessSet warh_witnesses(Word n, Base base);
WitnessSet wmrh_witnesses(Word n, Base base);
/// Empty for n = 0: every M would satisfy M*0 + 0 = 0.
WitnessSet arh_multipliers(Word n, Base base);
WitnessSet mrh_multipliers(Word n, Base base);

WitnessSet witnesses(Word n, Base base, Mode mode);

/// s_b(n) divides n; zero counts as Niven.
bool is_niven(Word n, Base base);

/// Full record with every mode populated.
ClassificationRecord classify(Word n, Base base);

/// Record with only the requested modes populated; the others stay empty.
ClassificationRecord classify(Word n, Base base, ModeSet modes);

std::size_t multiplicity(Word n, Base base, Mode mode);

/// Necessary condition for MRH membership that needs no search: T = M*s and
/// T^R = T (mod b-1), so s * gcd(s, b-1) must divide n. Returns true when
/// that condition, or plain Niven divisibility, already rules MRH out.
bool mrh_excluded_by_divisibility(const Natural& n, Base base);

}  // namespace wrh
