#include "wrh/solvers.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>

#include "wrh/digits.hpp"

namespace wrh {

std::string_view mode_name(Mode mode) {
  switch (mode) {
    case Mode::AdditiveWeak:
      return "warh";
    case Mode::MultiplicativeWeak:
      return "wmrh";
    case Mode::AdditiveRH:
      return "arh";
    case Mode::MultiplicativeRH:
      return "mrh";
  }
  return "?";
}

Mode parse_mode(std::string_view name) {
  for (Mode m : kAllModes) {
    if (mode_name(m) == name) {
      return m;
    }
  }
  throw std::invalid_argument("unknown mode '" + std::string(name) + "'");
}

bool WitnessSet::contains(Word w) const { return std::binary_search(witnesses.begin(), witnesses.end(), w); }

const WitnessSet& ClassificationRecord::witnesses(Mode mode) const {
  switch (mode) {
    case Mode::AdditiveWeak:
      return warh_terms;
    case Mode::MultiplicativeWeak:
      return wmrh_terms;
    case Mode::AdditiveRH:
      return arh_multipliers;
    case Mode::MultiplicativeRH:
      break;
  }
  return mrh_multipliers;
}

WitnessSet& ClassificationRecord::witnesses(Mode mode) {
  return const_cast<WitnessSet&>(std::as_const(*this).witnesses(mode));
}

namespace {

// Solves T + T^R = n for T with exactly `width` digits.
//
// Column j (from the least significant end) of T + T^R adds u_j and
// u_{width-1-j}, so the column sums c_j are symmetric and lie in [0, 2b-2].
// Column pairs are fixed from the outside in: the low column leaves at most
// two choices for c_j, and the mirrored high column then pins the carry it
// must receive, which prunes almost every branch.
class SumPreimageSearch {
 public:
  SumPreimageSearch(const std::vector<int>& n_digits, int base, std::size_t width, std::vector<Word>& out)
      : n_(n_digits), b_(base), width_(width), sums_((width + 1) / 2), out_(out) {
    powers_.resize(width);
    Word p = 1;
    for (std::size_t j = 0; j < width; ++j) {
      powers_[j] = p;
      if (j + 1 < width) {
        p *= static_cast<Word>(b_);
      }
    }
  }

  void run(int top_carry) { columns(0, 0, top_carry); }

 private:
  // low_carry: carry into column i. high_carry: carry out of column width-1-i.
  void columns(std::size_t i, int low_carry, int high_carry) {
    const std::size_t half = width_ / 2;
    if (i == half) {
      if (width_ % 2 == 0) {
        if (low_carry == high_carry) {
          digits(0, 0);
        }
        return;
      }
      const int mid = n_[half] + b_ * high_carry - low_carry;
      if (mid >= 0 && mid <= 2 * b_ - 2 && mid % 2 == 0) {
        sums_[half] = mid;
        digits(0, 0);
      }
      return;
    }
    const std::size_t lo = i;
    const std::size_t hi = width_ - 1 - i;
    const int residue = ((n_[lo] - low_carry) % b_ + b_) % b_;
    for (int c : {residue, residue + b_}) {
      if (c > 2 * b_ - 2) {
        continue;
      }
      const int next_low = (c + low_carry - n_[lo]) / b_;
      const int next_high = n_[hi] + b_ * high_carry - c;
      if (next_high != 0 && next_high != 1) {
        continue;
      }
      sums_[i] = c;
      columns(i + 1, next_low, next_high);
    }
  }

  // Splits each column sum into a digit pair and emits every T.
  void digits(std::size_t i, Word partial) {
    const std::size_t half = width_ / 2;
    if (i == half) {
      if (width_ % 2 == 1) {
        const int u = sums_[half] / 2;
        if (width_ == 1 && u == 0) {
          return;
        }
        partial += static_cast<Word>(u) * powers_[half];
      }
      out_.push_back(partial);
      return;
    }
    const std::size_t lo = i;
    const std::size_t hi = width_ - 1 - i;
    const int c = sums_[i];
    const int u_hi_min = (hi == width_ - 1) ? 1 : 0;
    for (int u_lo = std::max(0, c - (b_ - 1)); u_lo <= std::min(b_ - 1, c); ++u_lo) {
      const int u_hi = c - u_lo;
      if (u_hi < u_hi_min) {
        continue;
      }
      digits(i + 1, partial + static_cast<Word>(u_lo) * powers_[lo] + static_cast<Word>(u_hi) * powers_[hi]);
    }
  }

  const std::vector<int>& n_;
  int b_;
  std::size_t width_;
  std::vector<int> sums_;
  std::vector<Word> powers_;
  std::vector<Word>& out_;
};

std::optional<Word> checked_reverse(Word t, Word b) {
  Word r = 0;
  for (; t != 0; t /= b) {
    if (__builtin_mul_overflow(r, b, &r) || __builtin_add_overflow(r, t % b, &r)) {
      return std::nullopt;
    }
  }
  return r;
}

WitnessSet make_set(Word n, Base base, Mode mode) { return WitnessSet{n, base, mode, {}}; }

void fill_weak(WitnessSet& set, const std::vector<Word>& preimages, Word s) {
  for (Word t : preimages) {
    if (t >= s) {
      set.witnesses.push_back(t - s);
    }
  }
}

void fill_rh(WitnessSet& set, const std::vector<Word>& preimages, Word s) {
  if (s == 0) {
    return;
  }
  for (Word t : preimages) {
    if (t != 0 && t % s == 0) {
      set.witnesses.push_back(t / s);
    }
  }
}

}  // namespace

std::vector<Word> sum_preimages(Word n, Base base) {
  if (n == 0) {
    return {0};
  }
  const std::vector<int> n_digits = detail::lsd_digits(n, base);
  const std::size_t len = n_digits.size();
  std::vector<Word> out;
  // T has len or len-1 digits; in the shorter case the final carry is the
  // leading digit of n and must be 1.
  SumPreimageSearch(n_digits, base.value(), len, out).run(0);
  if (len >= 2 && n_digits[len - 1] == 1) {
    SumPreimageSearch(n_digits, base.value(), len - 1, out).run(1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> product_preimages(Word n, Base base) {
  std::vector<Word> out;
  if (n == 0) {
    return out;
  }
  const Word b = base.word();
  auto accept = [&](Word t) {
    const auto r = checked_reverse(t, b);
    if (r && *r == n / t) {
      out.push_back(t);
    }
  };
  for (Word d = 1; d <= n / d; ++d) {
    if (n % d != 0) {
      continue;
    }
    accept(d);
    if (d != n / d) {
      accept(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

WitnessSet warh_witnesses(Word n, Base base) {
  auto set = make_set(n, base, Mode::AdditiveWeak);
  fill_weak(set, sum_preimages(n, base), digit_sum(n, base));
  return set;
}

WitnessSet wmrh_witnesses(Word n, Base base) {
  auto set = make_set(n, base, Mode::MultiplicativeWeak);
  if (n == 0) {
    set.witnesses.push_back(0);
    return set;
  }
  fill_weak(set, product_preimages(n, base), digit_sum(n, base));
  return set;
}

WitnessSet arh_multipliers(Word n, Base base) {
  auto set = make_set(n, base, Mode::AdditiveRH);
  if (n != 0) {
    fill_rh(set, sum_preimages(n, base), digit_sum(n, base));
  }
  return set;
}

WitnessSet mrh_multipliers(Word n, Base base) {
  auto set = make_set(n, base, Mode::MultiplicativeRH);
  if (n != 0) {
    fill_rh(set, product_preimages(n, base), digit_sum(n, base));
  }
  return set;
}

WitnessSet witnesses(Word n, Base base, Mode mode) {
  switch (mode) {
    case Mode::AdditiveWeak:
      return warh_witnesses(n, base);
    case Mode::MultiplicativeWeak:
      return wmrh_witnesses(n, base);
    case Mode::AdditiveRH:
      return arh_multipliers(n, base);
    case Mode::MultiplicativeRH:
      break;
  }
  return mrh_multipliers(n, base);
}

bool is_niven(Word n, Base base) {
  if (n == 0) {
    return true;
  }
  return n % digit_sum(n, base) == 0;
}

ClassificationRecord classify(Word n, Base base) { return classify(n, base, ModeSet::all()); }

ClassificationRecord classify(Word n, Base base, ModeSet modes) {
  ClassificationRecord rec;
  rec.n = n;
  rec.base = base;
  rec.digit_sum = digit_sum(n, base);
  rec.is_palindrome = is_palindrome(n, base);
  rec.is_niven = n == 0 || n % rec.digit_sum == 0;
  for (Mode m : kAllModes) {
    rec.witnesses(m) = make_set(n, base, m);
  }

  const Word s = rec.digit_sum;
  if (modes.contains(Mode::AdditiveWeak) || modes.contains(Mode::AdditiveRH)) {
    const auto sums = sum_preimages(n, base);
    if (modes.contains(Mode::AdditiveWeak)) {
      fill_weak(rec.warh_terms, sums, s);
    }
    if (modes.contains(Mode::AdditiveRH) && n != 0) {
      fill_rh(rec.arh_multipliers, sums, s);
    }
  }
  if (modes.contains(Mode::MultiplicativeWeak) || modes.contains(Mode::MultiplicativeRH)) {
    if (n == 0) {
      if (modes.contains(Mode::MultiplicativeWeak)) {
        rec.wmrh_terms.witnesses.push_back(0);
      }
    } else {
      // MRH needs s | n, so the divisor search is skipped when only MRH is
      // requested and n is not Niven.
      const bool need = modes.contains(Mode::MultiplicativeWeak) || rec.is_niven;
      const auto products = need ? product_preimages(n, base) : std::vector<Word>{};
      if (modes.contains(Mode::MultiplicativeWeak)) {
        fill_weak(rec.wmrh_terms, products, s);
      }
      if (modes.contains(Mode::MultiplicativeRH)) {
        fill_rh(rec.mrh_multipliers, products, s);
      }
    }
  }
  return rec;
}

std::size_t multiplicity(Word n, Base base, Mode mode) { return witnesses(n, base, mode).size(); }

bool mrh_excluded_by_divisibility(const Natural& n, Base base) {
  if (n == 0) {
    return true;
  }
  const Natural s = digit_sum(n, base);
  if (n % s != 0) {
    return true;
  }
  const Natural g = boost::multiprecision::gcd(s, Natural(base.value() - 1));
  return n % (s * g) != 0;
}

}  // namespace wrh
