#pragma once

// Independent oracles for the tests. Everything here is written from the
// class definitions with plain loops and shares no code with the library
// beyond the Word type.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "wrh/core.hpp"

namespace oracle {

using wrh::Word;

inline Word rev(Word n, Word b) {
  Word r = 0;
  for (; n > 0; n /= b) {
    r = r * b + n % b;
  }
  return r;
}

inline Word dsum(Word n, Word b) {
  Word s = 0;
  for (; n > 0; n /= b) {
    s += n % b;
  }
  return s;
}

// Forward sieve: every T up to limit mapped to T + T^R and T * T^R. The
// preimage lists are ascending because T is visited in order.
struct Sieve {
  Word limit;
  Word base;
  std::vector<std::vector<Word>> sums;
  std::vector<std::vector<Word>> products;

  Sieve(Word limit_, Word base_) : limit(limit_), base(base_), sums(limit_ + 1), products(limit_ + 1) {
    for (Word t = 0; t <= limit; ++t) {
      const Word r = rev(t, base);
      if (t + r <= limit) {
        sums[t + r].push_back(t);
      }
      if (t >= 1 && r != 0 && t <= limit / r) {
        products[t * r].push_back(t);
      }
    }
  }

  std::vector<Word> weak(Word n, bool additive) const {
    std::vector<Word> out;
    if (!additive && n == 0) {
      return {0};
    }
    const Word s = dsum(n, base);
    for (Word t : additive ? sums[n] : products[n]) {
      if (t >= s) {
        out.push_back(t - s);
      }
    }
    return out;
  }

  std::vector<Word> rh(Word n, bool additive) const {
    std::vector<Word> out;
    if (n == 0) {
      return out;
    }
    const Word s = dsum(n, base);
    for (Word t : additive ? sums[n] : products[n]) {
      if (t % s == 0 && t / s >= 1) {
        out.push_back(t / s);
      }
    }
    return out;
  }
};

}  // namespace oracle
