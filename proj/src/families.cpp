#include "wrh/families.hpp"

#include <limits>
#include <sstream>

#include "wrh/digits.hpp"
#include "wrh/solvers.hpp"

namespace wrh {

namespace {

constexpr std::size_t kMinBlock = 1;

// Full MRH searches run by trial division up to sqrt(n).
const Natural kMrhSearchLimit = Natural(100'000'000'000'000ULL);

std::string str(const Natural& n) { return n.str(); }

bool fits_word(const Natural& n) { return n >= 0 && n <= std::numeric_limits<Word>::max(); }

std::vector<int> msd_digits(const Natural& n, Base base) { return to_digits(n, base).digits(); }

std::string bracket(const Natural& n, Base base) {
  return "[" + to_digits(n, base).str() + "]_" + std::to_string(base.value());
}

Natural pow_base(Base base, std::size_t e) {
  return boost::multiprecision::pow(Natural(base.value()), static_cast<unsigned>(e));
}

std::size_t pow_size(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    r *= b;
  }
  return r;
}

FamilyMember member(std::string label, Natural n) { return FamilyMember{std::move(label), std::move(n), {}}; }

std::string label_k(FamilyId id, Base base, std::size_t k) {
  return std::string(family_name(id)) + " b=" + std::to_string(base.value()) + " k=" + std::to_string(k);
}

// ---- F5 case dispatch ----

enum class SquareCase { Binary, EvenBase, OddBaseMod3, OneMod3 };

SquareCase square_case(Base base) {
  const int b = base.value();
  if (b == 2) {
    return SquareCase::Binary;
  }
  if (b % 2 == 0) {
    return SquareCase::EvenBase;
  }
  if (b % 3 == 0 || b % 3 == 2) {
    return SquareCase::OddBaseMod3;
  }
  if (b >= 11) {
    return SquareCase::OneMod3;
  }
  throw InvalidParams("F5 has no construction for base " + std::to_string(b));
}

// ---- per-family validity of k ----

bool k_valid(FamilyId id, Base base, std::size_t k) {
  switch (id) {
    case FamilyId::F1:
    case FamilyId::F2:
    case FamilyId::F3:
      return k >= 1;
    case FamilyId::F4:
      return base.value() == 3 || k % 2 == 0;
    case FamilyId::F5:
      return k >= 1 && (square_case(base) != SquareCase::OddBaseMod3 || k % 2 == 0);
    default:
      return false;
  }
}

std::size_t k_min(FamilyId id) { return id == FamilyId::F4 ? 0 : 1; }

FamilyMember make_k_member(FamilyId id, Base base, std::size_t k) {
  const int top = base.value() - 1;
  switch (id) {
    case FamilyId::F1: {
      auto m = member(label_k(id, base, k), build(Pattern{}.digit(1).digit(0, k).digit(0, k).digit(1), base));
      m.claims.push_back({ClaimKind::WarhExtraTerm, pow_base(base, 2 * k) - 2, 0});
      return m;
    }
    case FamilyId::F2: {
      const Natural p = build(Pattern{}.digit(1).digit(0, k - 1).digit(1), base);
      auto m = member(label_k(id, base, k), p * p);
      m.claims.push_back({ClaimKind::WmrhExtraTerm, pow_base(base, k) - 1, 0});
      return m;
    }
    case FamilyId::F3: {
      auto m = member(label_k(id, base, k),
                      build(Pattern{}.digit(1).digit(0, k).digit(top).digit(top).digit(0, k).digit(1), base));
      m.claims.push_back({ClaimKind::WarhMember, 0, 0});
      m.claims.push_back({ClaimKind::DigitSum, Natural(2 * base.value()), 0});
      m.claims.push_back({ClaimKind::NotNiven, 0, 0});
      return m;
    }
    case FamilyId::F4: {
      const Pattern pat = base.value() == 3 ? Pattern{}.digit(2).digit(0, k).digit(2).digit(0, k).digit(2)
                                            : Pattern{}.digit(top).digit(0, k).digit(top);
      auto m = member(label_k(id, base, k), build(pat, base));
      m.claims.push_back({ClaimKind::WarhMember, 0, 0});
      m.claims.push_back({ClaimKind::NotMrh, 0, 0});
      return m;
    }
    case FamilyId::F5: {
      Pattern root;
      int claimed_sum = 0;
      switch (square_case(base)) {
        case SquareCase::Binary:
          root.digit(1).digit(0, k).digit(1).digit(0, k).digit(1);
          claimed_sum = 6;
          break;
        case SquareCase::EvenBase:
          root.digit(1).digit(0, k).digit(1);
          claimed_sum = 4;
          break;
        case SquareCase::OddBaseMod3:
          root.digit(1).digit(0, k).digit(1).digit(0, k).digit(1);
          claimed_sum = 9;
          break;
        case SquareCase::OneMod3:
          root.digit(2).digit(0, k).digit(1).digit(0, k).digit(2);
          claimed_sum = 24;
          break;
      }
      const Natural p = build(root, base);
      const Natural n = p * p;
      auto m = member(label_k(id, base, k), n);
      m.claims.push_back({ClaimKind::WmrhExtraTerm, Natural(p - digit_sum(n, base)), 0});
      m.claims.push_back({ClaimKind::DigitSum, Natural(claimed_sum), 0});
      m.claims.push_back({ClaimKind::NotNiven, 0, 0});
      m.claims.push_back({ClaimKind::NotMrh, 0, 0});
      return m;
    }
    default:
      break;
  }
  throw InvalidParams("family does not take k");
}

std::vector<FamilyMember> generate_by_k(const FamilySpec& spec, std::size_t count) {
  std::size_t k = spec.params.k.value_or(k_min(spec.id));
  if (!k_valid(spec.id, spec.base, k)) {
    if (spec.params.k) {
      throw InvalidParams(std::string(family_name(spec.id)) + ": k=" + std::to_string(k) +
                          " violates the family's side conditions");
    }
    ++k;
  }
  std::vector<FamilyMember> out;
  for (; out.size() < count; ++k) {
    if (k_valid(spec.id, spec.base, k)) {
      out.push_back(make_k_member(spec.id, spec.base, k));
    }
  }
  return out;
}

std::vector<FamilyMember> generate_progression(const FamilySpec& spec, std::size_t count) {
  const Base base = spec.base;
  if (!spec.params.i || spec.params.i->empty()) {
    throw InvalidParams("F6 needs a nonempty digit string I");
  }
  const std::vector<int>& prefix = *spec.params.i;
  if (prefix.front() == 0) {
    throw InvalidParams("F6: I must not start with 0");
  }
  for (int d : prefix) {
    if (d < 0 || d >= base.value()) {
      throw InvalidParams("F6: digit " + std::to_string(d) + " not valid in base " + std::to_string(base.value()));
    }
  }
  const std::vector<int> suffix(prefix.rbegin(), prefix.rend());
  const std::string i_text = DigitString(base, prefix).str();

  std::vector<FamilyMember> out;
  const auto length = std::min<std::size_t>(count, static_cast<std::size_t>(base.value()));
  for (std::size_t j = 0; j < length; ++j) {
    const int d = static_cast<int>(j);
    const Natural n = build(Pattern{}.digits(prefix).digit(d).digit(d).digits(suffix), base);
    auto m = member("F6 b=" + std::to_string(base.value()) + " I=" + i_text + " j=" + std::to_string(j), n);
    m.claims.push_back({ClaimKind::WarhMember, 0, 0});
    out.push_back(std::move(m));
  }
  if (out.size() >= 2) {
    const Natural step = out[1].n - out[0].n;
    for (std::size_t j = 1; j < out.size(); ++j) {
      out[j].claims.push_back({ClaimKind::ProgressionStep, out[j - 1].n, step});
    }
  }
  return out;
}

// Repunit family with its additive multipliers k * [(1)^p I]_b.
FamilyMember make_repunit_member(const FamilySpec& spec, std::size_t p) {
  const Base base = spec.base;
  const std::size_t k = pow_size(static_cast<std::size_t>(base.value()), p);
  const std::size_t free_len = k - 2 * p;
  const std::size_t half = free_len / 2;

  auto m = member("F7 b=" + std::to_string(base.value()) + " p=" + std::to_string(p) + " k=" + std::to_string(k),
                  build(Pattern{}.digit(1, k), base));
  m.claims.push_back({ClaimKind::WarhMember, 0, 0});
  m.claims.push_back({ClaimKind::MinArhCount, boost::multiprecision::pow(Natural(2), static_cast<unsigned>(half)), 0});

  // I is fixed by its first half; mirrored positions hold opposite bits.
  std::vector<int> bits(half, 0);
  for (std::size_t emitted = 0; emitted < spec.claim_budget; ++emitted) {
    std::vector<int> digits(p, 1);
    digits.insert(digits.end(), bits.begin(), bits.end());
    for (std::size_t i = half; i-- > 0;) {
      digits.push_back(1 - bits[i]);
    }
    const Natural value = Natural(k) * from_digits(std::span<const int>(digits), base);
    m.claims.push_back({ClaimKind::ArhMultiplier, value, 0});

    // next first-half in lexicographic order
    std::size_t pos = half;
    while (pos > 0 && bits[pos - 1] == 1) {
      bits[--pos] = 0;
    }
    if (pos == 0) {
      break;
    }
    bits[pos - 1] = 1;
  }
  return m;
}

// Alternating family with its extra terms 2([(1)^p I 0]_b - 1).
FamilyMember make_alternating_member(const FamilySpec& spec, std::size_t p) {
  const Base base = spec.base;
  const int b = base.value();
  const std::size_t k = pow_size(static_cast<std::size_t>(b), p);
  const std::size_t blocks = k - 2 * p;
  const std::size_t half = blocks / 2;

  Pattern pat;
  pat.digit(1, p).group(Pattern{1, 0}, blocks).digit(0).digit(1, p);
  auto m = member("F8 b=" + std::to_string(b) + " p=" + std::to_string(p) + " k=" + std::to_string(k),
                  build(pat, base));
  m.claims.push_back({ClaimKind::WarhMember, 0, 0});
  m.claims.push_back(
      {ClaimKind::ExactWarhCount, boost::multiprecision::pow(Natural(b - 1), static_cast<unsigned>(half)), 0});

  std::vector<int> alphas(half, 1);
  for (std::size_t emitted = 0; emitted < spec.claim_budget; ++emitted) {
    std::vector<int> digits(p, 1);
    for (std::size_t j = 0; j < blocks; ++j) {
      digits.push_back(0);
      digits.push_back(j < half ? alphas[j] : b - alphas[blocks - 1 - j]);
    }
    digits.push_back(0);
    const Natural value = 2 * (from_digits(std::span<const int>(digits), base) - 1);
    m.claims.push_back({ClaimKind::WarhExtraTerm, value, 0});

    std::size_t pos = half;
    while (pos > 0 && alphas[pos - 1] == b - 1) {
      alphas[--pos] = 1;
    }
    if (pos == 0) {
      break;
    }
    ++alphas[pos - 1];
  }
  return m;
}

std::vector<FamilyMember> generate_growth(const FamilySpec& spec, std::size_t count) {
  if (spec.base.value() % 2 != 0) {
    throw InvalidParams(std::string(family_name(spec.id)) + " needs an even base");
  }
  std::size_t p = spec.params.p.value_or(kMinBlock);
  if (p < 1) {
    throw InvalidParams(std::string(family_name(spec.id)) + " needs p >= 1");
  }
  std::vector<FamilyMember> out;
  for (; out.size() < count; ++p) {
    out.push_back(spec.id == FamilyId::F7 ? make_repunit_member(spec, p) : make_alternating_member(spec, p));
  }
  return out;
}

// ---- claim verification ----

std::string sum_detail(const Natural& s, const Natural& t, const Natural& lhs, const Natural& n, char op) {
  std::ostringstream os;
  os << "s=" << s << " T=" << t << " T" << op << "T^R=" << lhs << " N=" << n;
  return os.str();
}

ClaimInstance verdict(std::string params, bool ok, std::string detail) {
  return ClaimInstance{std::move(params), ok ? Verdict::Pass : Verdict::Fail, std::move(detail)};
}

}  // namespace

std::string_view family_name(FamilyId id) {
  static constexpr std::string_view names[] = {"F1", "F2", "F3", "F4", "F5", "F6", "F7", "F8"};
  return names[static_cast<int>(id)];
}

FamilyId parse_family(std::string_view name) {
  for (int i = 0; i < 8; ++i) {
    const auto id = static_cast<FamilyId>(i);
    if (family_name(id) == name) {
      return id;
    }
  }
  throw InvalidParams("unknown family '" + std::string(name) + "'");
}

std::string_view claim_kind_name(ClaimKind kind) {
  switch (kind) {
    case ClaimKind::WarhExtraTerm:
      return "warh-extra-term";
    case ClaimKind::WmrhExtraTerm:
      return "wmrh-extra-term";
    case ClaimKind::ArhMultiplier:
      return "arh-multiplier";
    case ClaimKind::WarhMember:
      return "warh-member";
    case ClaimKind::DigitSum:
      return "digit-sum";
    case ClaimKind::MinArhCount:
      return "min-arh-count";
    case ClaimKind::ExactWarhCount:
      return "exact-warh-count";
    case ClaimKind::NotNiven:
      return "not-niven";
    case ClaimKind::NotMrh:
      return "not-mrh";
    case ClaimKind::ProgressionStep:
      return "progression-step";
  }
  return "?";
}

std::vector<FamilyMember> generate(const FamilySpec& spec, std::size_t count) {
  switch (spec.id) {
    case FamilyId::F6:
      return generate_progression(spec, count);
    case FamilyId::F7:
    case FamilyId::F8:
      return generate_growth(spec, count);
    default:
      return generate_by_k(spec, count);
  }
}

Natural additive_lhs(const Natural& n, const Natural& extra_term, Base base) {
  const Natural t = extra_term + digit_sum(n, base);
  return t + reverse_value(t, base);
}

Natural multiplicative_lhs(const Natural& n, const Natural& extra_term, Base base) {
  const Natural t = extra_term + digit_sum(n, base);
  return t * reverse_value(t, base);
}

ClaimInstance verify_claim(const FamilyMember& m, const FamilyClaim& claim, Base base) {
  std::string params = m.label + " " + std::string(claim_kind_name(claim.kind));
  const bool has_value = claim.kind == ClaimKind::WarhExtraTerm || claim.kind == ClaimKind::WmrhExtraTerm ||
                         claim.kind == ClaimKind::ArhMultiplier || claim.kind == ClaimKind::DigitSum ||
                         claim.kind == ClaimKind::MinArhCount || claim.kind == ClaimKind::ExactWarhCount;
  if (has_value) {
    params += "=" + str(claim.value);
  }
  const Natural& n = m.n;
  const Natural s = digit_sum(n, base);

  switch (claim.kind) {
    case ClaimKind::WarhExtraTerm:
    case ClaimKind::WmrhExtraTerm: {
      if (claim.value < 0) {
        return verdict(std::move(params), false, "extra term is negative: " + str(claim.value));
      }
      const bool additive = claim.kind == ClaimKind::WarhExtraTerm;
      const Natural t = claim.value + s;
      const Natural lhs = additive ? additive_lhs(n, claim.value, base) : multiplicative_lhs(n, claim.value, base);
      return verdict(std::move(params), lhs == n, sum_detail(s, t, lhs, n, additive ? '+' : '*'));
    }
    case ClaimKind::ArhMultiplier: {
      const Natural t = claim.value * s;
      const Natural lhs = t + reverse_value(t, base);
      // The same integer read as an extra term and as the sum term itself.
      const Natural as_term = additive_lhs(n, claim.value, base);
      const Natural as_sum = claim.value + reverse_value(claim.value, base);
      std::ostringstream os;
      os << sum_detail(s, t, lhs, n, '+') << "; read as extra term: " << as_term << "; read as T: " << as_sum;
      return verdict(std::move(params), claim.value >= 1 && lhs == n, os.str());
    }
    case ClaimKind::WarhMember: {
      try {
        const Natural a = canonical_palindrome_witness(n, base);
        const Natural lhs = additive_lhs(n, a, base);
        return verdict(std::move(params), lhs == n,
                       "palindrome witness A=" + str(a) + " " + sum_detail(s, a + s, lhs, n, '+'));
      } catch (const NotEligible&) {
      }
      if (fits_word(n)) {
        const auto ws = warh_witnesses(n.convert_to<Word>(), base);
        return verdict(std::move(params), !ws.empty(),
                       "solver found " + std::to_string(ws.size()) + " extra terms" +
                           (ws.empty() ? "" : ", least " + std::to_string(ws.witnesses.front())));
      }
      return ClaimInstance{std::move(params), Verdict::NotApplicable, "not a palindrome witness case and N exceeds 64 bits"};
    }
    case ClaimKind::DigitSum:
      return verdict(std::move(params), s == claim.value, "s_b(N)=" + str(s));
    case ClaimKind::MinArhCount:
    case ClaimKind::ExactWarhCount: {
      if (!fits_word(n)) {
        return ClaimInstance{std::move(params), Verdict::NotApplicable, "N exceeds 64 bits"};
      }
      const Word w = n.convert_to<Word>();
      const bool at_least = claim.kind == ClaimKind::MinArhCount;
      const std::size_t found = at_least ? arh_multipliers(w, base).size() : warh_witnesses(w, base).size();
      const bool ok = at_least ? Natural(found) >= claim.value : Natural(found) == claim.value;
      return verdict(std::move(params), ok, "solver count=" + std::to_string(found));
    }
    case ClaimKind::NotNiven: {
      const bool ok = s == 0 ? false : n % s != 0;
      return verdict(std::move(params), ok, "s=" + str(s) + " N mod s=" + (s == 0 ? "-" : str(n % s)));
    }
    case ClaimKind::NotMrh: {
      if (mrh_excluded_by_divisibility(n, base)) {
        if (s == 0 || n % s != 0) {
          return verdict(std::move(params), true, "not Niven: s=" + str(s) + " does not divide N");
        }
        const Natural g = boost::multiprecision::gcd(s, Natural(base.value() - 1));
        return verdict(std::move(params), true, "s*gcd(s,b-1)=" + str(s * g) + " does not divide N");
      }
      if (n <= kMrhSearchLimit) {
        const auto ms = mrh_multipliers(n.convert_to<Word>(), base);
        std::string detail = "divisor search: " + std::to_string(ms.size()) + " multipliers";
        if (!ms.empty()) {
          detail += ", least M=" + std::to_string(ms.witnesses.front());
        }
        return verdict(std::move(params), ms.empty(), detail);
      }
      return ClaimInstance{std::move(params), Verdict::NotApplicable,
                           "divisibility test inconclusive and N above the divisor-search limit"};
    }
    case ClaimKind::ProgressionStep: {
      const Natural diff = n - claim.value;
      return verdict(std::move(params), diff == claim.other,
                     "N - previous=" + str(diff) + " common difference=" + str(claim.other));
    }
  }
  return ClaimInstance{std::move(params), Verdict::NotApplicable, "unknown claim"};
}

ClaimReport verify_family(const FamilySpec& spec, std::size_t count) {
  const auto members = generate(spec, count);
  ClaimReport report(std::string(family_name(spec.id)),
                     "b=" + std::to_string(spec.base.value()) + ", " + std::to_string(members.size()) + " members");
  for (const auto& m : members) {
    for (const auto& c : m.claims) {
      report.instances.push_back(verify_claim(m, c, spec.base));
    }
  }
  return report;
}

Natural canonical_palindrome_witness(const Natural& n, Base base) {
  if (n == 0) {
    return 0;
  }
  const std::vector<int> d = msd_digits(n, base);
  if (!is_palindrome(n, base)) {
    throw NotEligible(bracket(n, base) + " is not a palindrome");
  }
  const std::size_t half = d.size() / 2;
  std::vector<int> t(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(half));
  if (d.size() % 2 == 1) {
    const int middle = d[half];
    if (d.size() == 1) {
      throw NotEligible(bracket(n, base) + " has a single nonzero digit");
    }
    if (middle % 2 != 0) {
      throw NotEligible(bracket(n, base) + " has an odd middle digit");
    }
    t.push_back(middle / 2);
  }
  t.insert(t.end(), half, 0);
  return from_digits(std::span<const int>(t), base) - digit_sum(n, base);
}

SquareWitness canonical_square_witness(const Natural& p, Base base) {
  if (p < base.value()) {
    throw NotEligible(bracket(p, base) + " has fewer than two digits");
  }
  if (!is_palindrome(p, base)) {
    throw NotEligible(bracket(p, base) + " is not a palindrome");
  }
  Natural n = p * p;
  Natural a = p - digit_sum(n, base);
  return SquareWitness{std::move(n), std::move(a)};
}

}  // namespace wrh
