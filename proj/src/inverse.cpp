#include "wrh/inverse.hpp"

#include <algorithm>
#include <stdexcept>

#include "wrh/digits.hpp"

namespace wrh {

namespace {

Natural candidate(const Natural& t, Base base, Mode mode) {
  const Natural r = reverse_value(t, base);
  return mode == Mode::AdditiveWeak ? Natural(t + r) : Natural(t * r);
}

// Upper bound on s_b(N) when A + s has `width` digits.
Natural digit_sum_ceiling(std::size_t width, Base base, Mode mode) {
  const std::size_t n_width = mode == Mode::AdditiveWeak ? width + 1 : 2 * width;
  return Natural(base.value() - 1) * n_width;
}

Natural pow_base(Base base, std::size_t e) { return boost::multiprecision::pow(Natural(base.value()), static_cast<unsigned>(e)); }

}  // namespace

InverseResult solve_extra_term(const Natural& extra_term, Base base, Mode mode) {
  if (!is_weak(mode)) {
    throw std::invalid_argument("extra terms exist only for the weak modes");
  }
  if (extra_term < 0) {
    throw std::invalid_argument("extra term must be nonnegative");
  }
  InverseResult result;
  result.extra_term = extra_term;
  result.base = base;
  result.mode = mode;

  // s = 0 only for N = 0, which needs T = A = 0.
  if (extra_term == 0) {
    result.instances.push_back(0);
  }

  auto try_sum = [&](const Natural& s) {
    const Natural n = candidate(extra_term + s, base, mode);
    if (digit_sum(n, base) == s) {
      result.instances.push_back(n);
    }
    result.s_scanned = std::max(result.s_scanned, s);
  };

  const std::size_t a_width = digit_count(extra_term, base);
  const std::size_t cap_width = mode == Mode::AdditiveWeak ? a_width + 4 : 2 * a_width + 6;
  result.s_cap = Natural(base.value() - 1) * cap_width;
  for (Natural s = 1; s <= result.s_cap; ++s) {
    try_sum(s);
  }

  // Tail certification, one block of equal digit length of A + s at a time.
  const Natural slope = digit_sum_ceiling(1, base, mode) - digit_sum_ceiling(0, base, mode);
  Natural lo = result.s_cap + 1;
  for (;;) {
    ++result.tail_blocks;
    const std::size_t width = digit_count(Natural(extra_term + lo), base);
    const Natural hi = pow_base(base, width) - extra_term - 1;
    const Natural ceiling = digit_sum_ceiling(width, base, mode);
    if (ceiling >= lo) {
      const Natural last = std::min(hi, ceiling);
      for (Natural s = lo; s <= last; ++s) {
        try_sum(s);
      }
    }
    // Every later block starts at b^(w'-1) - A and has ceiling linear in w'
    // with step `slope`; once the next block clears its ceiling and the
    // block starts grow by at least `slope`, all further blocks clear too.
    const Natural next_start = hi + 1;
    const bool next_clear = digit_sum_ceiling(width + 1, base, mode) < next_start;
    const bool outpaces = pow_base(base, width) - pow_base(base, width - 1) >= slope;
    if (ceiling < lo && next_clear && outpaces) {
      break;
    }
    lo = next_start;
  }

  std::sort(result.instances.begin(), result.instances.end());
  result.instances.erase(std::unique(result.instances.begin(), result.instances.end()), result.instances.end());
  return result;
}

std::vector<Natural> extra_term_instances(const Natural& extra_term, Base base, Mode mode) {
  return solve_extra_term(extra_term, base, mode).instances;
}

std::optional<Natural> stated_digit_bound(const Natural& extra_term, Base base, Mode mode) {
  if (mode == Mode::AdditiveWeak) {
    return Natural(extra_term + 4);
  }
  if (mode == Mode::MultiplicativeWeak && extra_term >= 1) {
    return Natural(extra_term + (base.value() >= 6 ? 4 : 5));
  }
  return std::nullopt;
}

}  // namespace wrh
