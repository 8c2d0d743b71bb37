#include "wrh/checks.hpp"

#include <algorithm>
#include <sstream>

#include "wrh/digits.hpp"
#include "wrh/families.hpp"
#include "wrh/scan.hpp"

namespace wrh {

namespace {

std::string bracket(Word n, Base base) {
  return "[" + to_digits(n, base).str() + "]_" + std::to_string(base.value());
}

std::string n_param(Word n, Base base) { return "b=" + std::to_string(base.value()) + " N=" + std::to_string(n); }

Word ipow(Word b, unsigned e) {
  Word r = 1;
  for (unsigned i = 0; i < e; ++i) {
    r *= b;
  }
  return r;
}

// Collects the witnesses of one N that break a digit-count bound.
struct BoundCheck {
  explicit BoundCheck(ClaimReport& r) : report(&r) {}

  ClaimReport* report;
  bool applicable = false;
  std::vector<std::string> violations;

  void add(Word a, std::size_t k, std::size_t bound) {
    applicable = true;
    if (k > bound) {
      violations.push_back("A=" + std::to_string(a) + ": k=" + std::to_string(k) + " > " + std::to_string(bound));
    }
  }

  void flush(Word n, Base base, std::size_t k, std::size_t witnesses) {
    if (!applicable) {
      return;
    }
    std::string params = n_param(n, base);
    if (violations.empty()) {
      report->add(std::move(params), Verdict::Pass, "k=" + std::to_string(k) + " checked " + std::to_string(witnesses) + " terms");
    } else {
      std::string detail;
      for (const auto& v : violations) {
        detail += (detail.empty() ? "" : "; ") + v;
      }
      report->add(std::move(params), Verdict::Fail, detail);
    }
  }
};

}  // namespace

std::vector<Word> claimed_zero_term_set(Base base) {
  const Word b = base.word();
  std::vector<Word> out{0, b + (b - 2)};
  if (b == 2) {
    out.push_back(3);
  }
  if (b == 3) {
    out.push_back(8);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Word> zero_term_solutions(Base base) {
  const Word limit = ipow(base.word(), 4);
  std::vector<Word> out;
  for (Word n = 0; n < limit; ++n) {
    const Word s = digit_sum(n, base);
    if (s + reverse_value(s, base) == n) {
      out.push_back(n);
    }
  }
  return out;
}

ClaimReport check_zero_term_theorem(Base base) {
  ClaimReport report("zero-term-set", "b=" + std::to_string(base.value()) + " N < b^4");
  const auto computed = zero_term_solutions(base);
  const auto claimed = claimed_zero_term_set(base);
  const std::string b = "b=" + std::to_string(base.value());
  for (Word n : computed) {
    const Word s = digit_sum(n, base);
    std::ostringstream detail;
    detail << bracket(n, base) << " s=" << s << " s+s^R=" << s + reverse_value(s, base);
    if (std::binary_search(claimed.begin(), claimed.end(), n)) {
      report.pass(b + " N=" + std::to_string(n), detail.str());
    } else {
      report.fail(b + " N=" + std::to_string(n), "extra solution not in the stated set: " + detail.str());
    }
  }
  for (Word n : claimed) {
    if (!std::binary_search(computed.begin(), computed.end(), n)) {
      const Word s = digit_sum(n, base);
      std::ostringstream detail;
      detail << "stated but not a solution: " << bracket(n, base) << " s=" << s << " s+s^R=" << s + reverse_value(s, base);
      report.fail(b + " N=" + std::to_string(n), detail.str());
    }
  }
  return report;
}

ClaimReport check_bound_theorems(Base base, Word n_limit, int workers) {
  const std::string range = "b=" + std::to_string(base.value()) + " N < " + std::to_string(n_limit);
  ClaimReport warh_linear("warh-digits-le-A+4", range);
  ClaimReport warh_log("warh-digits-le-2log", range);
  ClaimReport wmrh_linear("wmrh-digits-le-A+4or5", range);
  ClaimReport wmrh_log("wmrh-digits-le-3log", range);

  const int b = base.value();
  const Word cube = ipow(base.word(), 3);
  const std::size_t mul_slack = b >= 6 ? 4 : 5;

  ScanRequest req;
  req.base = base;
  req.lo = 0;
  req.hi = n_limit;
  req.modes = ModeSet{Mode::AdditiveWeak, Mode::MultiplicativeWeak};
  req.workers = workers;
  if (n_limit == 0) {
    return ClaimReport("bounds", range);
  }

  scan(req, [&](const ClassificationRecord& rec) {
    const std::size_t k = digit_count(rec.n, base);
    const auto& add = rec.warh_terms.witnesses;
    const auto& mul = rec.wmrh_terms.witnesses;
    if (add.empty() && mul.empty()) {
      return;
    }
    BoundCheck a1(warh_linear);
    BoundCheck a2(warh_log);
    for (Word a : add) {
      a1.add(a, k, static_cast<std::size_t>(a) + 4);
      if (a >= cube) {
        a2.add(a, k, 2 * (digit_count(a, base) - 1));
      }
    }
    a1.flush(rec.n, base, k, add.size());
    a2.flush(rec.n, base, k, add.size());

    BoundCheck m1(wmrh_linear);
    BoundCheck m2(wmrh_log);
    for (Word a : mul) {
      if (a < 1) {
        continue;
      }
      m1.add(a, k, static_cast<std::size_t>(a) + mul_slack);
      if ((b >= 3 && a >= cube) || (b == 2 && a >= 4)) {
        m2.add(a, k, 3 * (digit_count(a, base) - 1));
      }
    }
    m1.flush(rec.n, base, k, mul.size());
    m2.flush(rec.n, base, k, mul.size());
  });

  ClaimReport all("bounds", range);
  all.merge(warh_linear);
  all.merge(warh_log);
  all.merge(wmrh_linear);
  all.merge(wmrh_log);
  return all;
}

ClaimReport check_digit_inequalities(Base base, std::span<const Natural> sample) {
  const std::string range = "b=" + std::to_string(base.value()) + " " + std::to_string(sample.size()) + " values";
  ClaimReport half("digit-sum-half", range);
  ClaimReport scaled("digit-sum-scaled", range);
  ClaimReport square("square-digit-sum", range);
  const int b = base.value();
  for (const Natural& n : sample) {
    const std::string params = "b=" + std::to_string(b) + " N=" + n.str();
    const std::size_t k = digit_count(n, base);
    const Natural s = digit_sum(n, base);
    if (k >= 2) {
      half.add(params, 2 * s <= n ? Verdict::Pass : Verdict::Fail, "2s=" + Natural(2 * s).str());
      // doubled to stay in integers: 4s + 2(b-1) <= 2Nb + (b-1)
      const Natural lhs = 4 * s + 2 * (b - 1);
      const Natural rhs = 2 * n * b + (b - 1);
      scaled.add(params, lhs <= rhs ? Verdict::Pass : Verdict::Fail, "2*lhs=" + lhs.str() + " 2*rhs=" + rhs.str());
    } else {
      half.skip(params, "fewer than two digits");
      scaled.skip(params, "fewer than two digits");
    }
    const Natural sq = digit_sum(Natural(n * n), base);
    const std::string sq_detail = "s_b(N^2)=" + sq.str();
    if (k >= 3) {
      square.add(params, sq <= n ? Verdict::Pass : Verdict::Fail, sq_detail);
    } else {
      square.skip(params, "fewer than three digits; " + sq_detail + (sq > n ? " > N" : " <= N"));
    }
  }
  ClaimReport all("inequalities", range);
  all.merge(half);
  all.merge(scaled);
  all.merge(square);
  return all;
}

ClaimReport check_growth(Base base, std::size_t p_count, std::size_t claim_budget) {
  ClaimReport all("growth", "b=" + std::to_string(base.value()) + " p=1.." + std::to_string(p_count));
  for (FamilyId id : {FamilyId::F7, FamilyId::F8}) {
    FamilySpec spec;
    spec.id = id;
    spec.base = base;
    spec.claim_budget = claim_budget;
    all.merge(verify_family(spec, p_count));
  }
  return all;
}

}  // namespace wrh
