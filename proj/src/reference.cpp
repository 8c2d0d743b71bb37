#include "wrh/reference.hpp"

#include "wrh/digits.hpp"

namespace wrh::reference {

namespace {

__extension__ typedef unsigned __int128 Wide;

Wide wide_reverse(Word t, Word b) {
  Wide r = 0;
  for (; t != 0; t /= b) {
    r = r * b + t % b;
  }
  return r;
}

}  // namespace

WitnessSet warh_witnesses_scan(Word n, Base base) {
  WitnessSet set{n, base, Mode::AdditiveWeak, {}};
  const Word s = digit_sum(n, base);
  if (n == 0) {
    set.witnesses.push_back(0);
    return set;
  }
  for (Word t = std::max<Word>(s, 1); t <= n; ++t) {
    if (Wide{t} + wide_reverse(t, base.word()) == n) {
      set.witnesses.push_back(t - s);
    }
  }
  return set;
}

WitnessSet wmrh_witnesses_scan(Word n, Base base) {
  WitnessSet set{n, base, Mode::MultiplicativeWeak, {}};
  const Word s = digit_sum(n, base);
  if (n == 0) {
    set.witnesses.push_back(0);
    return set;
  }
  for (Word t = 1; t <= n; ++t) {
    if (t >= s && Wide{t} * wide_reverse(t, base.word()) == n) {
      set.witnesses.push_back(t - s);
    }
  }
  return set;
}

WitnessSet arh_multipliers_scan(Word n, Base base) {
  WitnessSet set{n, base, Mode::AdditiveRH, {}};
  const Word s = digit_sum(n, base);
  if (n == 0) {
    return set;
  }
  for (Word m = 1; m <= n / s; ++m) {
    const Word t = m * s;
    if (Wide{t} + wide_reverse(t, base.word()) == n) {
      set.witnesses.push_back(m);
    }
  }
  return set;
}

WitnessSet mrh_multipliers_scan(Word n, Base base) {
  WitnessSet set{n, base, Mode::MultiplicativeRH, {}};
  const Word s = digit_sum(n, base);
  if (n == 0) {
    return set;
  }
  for (Word m = 1; m <= n / s; ++m) {
    const Word t = m * s;
    if (Wide{t} * wide_reverse(t, base.word()) == n) {
      set.witnesses.push_back(m);
    }
  }
  return set;
}

WitnessSet witnesses_scan(Word n, Base base, Mode mode) {
  switch (mode) {
    case Mode::AdditiveWeak:
      return warh_witnesses_scan(n, base);
    case Mode::MultiplicativeWeak:
      return wmrh_witnesses_scan(n, base);
    case Mode::AdditiveRH:
      return arh_multipliers_scan(n, base);
    case Mode::MultiplicativeRH:
      break;
  }
  return mrh_multipliers_scan(n, base);
}

ClassificationRecord classify_scan(Word n, Base base, ModeSet modes) {
  ClassificationRecord rec;
  rec.n = n;
  rec.base = base;
  rec.digit_sum = digit_sum(n, base);
  rec.is_palindrome = is_palindrome(n, base);
  rec.is_niven = n == 0 || n % rec.digit_sum == 0;
  for (Mode m : kAllModes) {
    rec.witnesses(m) = modes.contains(m) ? witnesses_scan(n, base, m) : WitnessSet{n, base, m, {}};
  }
  return rec;
}

}  // namespace wrh::reference
