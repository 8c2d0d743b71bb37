#include "wrh/tables.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <ostream>
#include <set>

#include "wrh/scan.hpp"

namespace wrh {

namespace {

constexpr Word kTableLimit = 10000;

std::string join(const std::vector<Word>& v) {
  std::string s;
  for (Word x : v) {
    s += (s.empty() ? "" : ",") + std::to_string(x);
  }
  return s;
}

std::string braces(const std::vector<Word>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    s += (i ? ", " : "") + std::to_string(v[i]);
  }
  return s + "}";
}

void describe(std::ostream& out, const TableComparison& t) {
  out << t.name << " table: caption " << t.caption_count << ", printed " << t.printed_rows << " rows, computed "
      << t.computed_count << " members\n";
  for (FindingKind k : {FindingKind::Match, FindingKind::ValueMismatch, FindingKind::Extra, FindingKind::Missing,
                        FindingKind::Duplicate}) {
    out << "  " << finding_name(k) << ": " << t.count(k) << "\n";
  }
  for (const auto& f : t.discrepancies()) {
    out << "  " << finding_name(f.kind) << " " << f.n << " printed " << braces(f.printed) << " computed "
        << braces(f.computed) << (f.low_confidence ? " [low-confidence row]" : "") << "\n";
  }
}

}  // namespace

std::string_view finding_name(FindingKind kind) {
  switch (kind) {
    case FindingKind::Match: return "match";
    case FindingKind::ValueMismatch: return "value-mismatch";
    case FindingKind::Extra: return "extra";
    case FindingKind::Missing: return "missing";
    case FindingKind::Duplicate: return "duplicate";
  }
  return "?";
}

std::size_t TableComparison::count(FindingKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(findings.begin(), findings.end(), [&](const Finding& f) { return f.kind == kind; }));
}

std::vector<Finding> TableComparison::discrepancies() const {
  std::vector<Finding> out;
  std::copy_if(findings.begin(), findings.end(), std::back_inserter(out),
               [](const Finding& f) { return f.kind != FindingKind::Match; });
  return out;
}

TableComparison compare_table(std::span<const TableRow> rows, Mode mode,
                              const std::vector<ClassificationRecord>& records) {
  TableComparison t;
  t.mode = mode;
  t.printed_rows = rows.size();

  std::map<Word, std::vector<Word>> members;
  for (const auto& r : records) {
    const auto& w = r.witnesses(mode).witnesses;
    if (!w.empty()) {
      members.emplace(r.n, w);
    }
  }
  t.computed_count = members.size();

  std::set<Word> seen;
  for (const auto& row : rows) {
    Finding f;
    f.n = row.n;
    f.printed = row.terms;
    f.low_confidence = row.low_confidence;
    const auto it = members.find(row.n);
    if (it != members.end()) {
      f.computed = it->second;
    }
    if (!seen.insert(row.n).second) {
      f.kind = FindingKind::Duplicate;
    } else if (it == members.end()) {
      f.kind = FindingKind::Extra;
    } else {
      bool ok;
      if (mode == Mode::AdditiveWeak) {
        ok = std::all_of(row.terms.begin(), row.terms.end(),
                         [&](Word a) { return std::binary_search(f.computed.begin(), f.computed.end(), a); });
      } else {
        auto printed = row.terms;
        std::sort(printed.begin(), printed.end());
        ok = printed == f.computed;
      }
      f.kind = ok ? FindingKind::Match : FindingKind::ValueMismatch;
    }
    t.findings.push_back(std::move(f));
  }
  for (const auto& [n, w] : members) {
    if (!seen.contains(n)) {
      t.findings.push_back(Finding{FindingKind::Missing, n, {}, w, false});
    }
  }
  return t;
}

bool DiscrepancyReport::has_discrepancies() const {
  return !additive.discrepancies().empty() || !multiplicative.discrepancies().empty();
}

DiscrepancyReport reproduce_tables(int workers) {
  ScanRequest req;
  req.base = kDecimal;
  req.lo = 0;
  req.hi = kTableLimit;
  req.modes = ModeSet{Mode::AdditiveWeak, Mode::MultiplicativeWeak};
  req.workers = workers;
  const auto records = scan_all(req);

  DiscrepancyReport rep;
  rep.additive = compare_table(additive_table(), Mode::AdditiveWeak, records);
  rep.additive.name = "additive";
  rep.additive.caption_count = 365;
  rep.additive.intro_count = 77;

  rep.multiplicative = compare_table(multiplicative_table(), Mode::MultiplicativeWeak, records);
  rep.multiplicative.name = "multiplicative";
  rep.multiplicative.caption_count = 77;
  rep.multiplicative.intro_count = 365;

  for (const auto* t : {&rep.additive, &rep.multiplicative}) {
    const std::string cls = t->mode == Mode::AdditiveWeak ? "wARH" : "wMRH";
    rep.header.push_back("computed " + cls + " count below 10000: " + std::to_string(t->computed_count));
    rep.header.push_back("caption states " + std::to_string(t->caption_count) + (t->caption_count == t->computed_count ? " (agrees)" : " (disagrees)"));
    rep.header.push_back("introduction states " + std::to_string(t->intro_count) + (t->intro_count == t->computed_count ? " (agrees)" : " (disagrees)"));
    rep.header.push_back("printed rows: " + std::to_string(t->printed_rows));
  }
  return rep;
}

void write_text(std::ostream& out, const DiscrepancyReport& report) {
  for (const auto& line : report.header) {
    out << line << "\n";
  }
  describe(out, report.additive);
  describe(out, report.multiplicative);
}

void write_kv(std::ostream& out, const DiscrepancyReport& report) {
  for (const auto* t : {&report.additive, &report.multiplicative}) {
    out << "table=" << t->name << " caption_count=" << t->caption_count << " intro_count=" << t->intro_count
        << " printed_rows=" << t->printed_rows << " computed_count=" << t->computed_count
        << " matches=" << t->count(FindingKind::Match) << " mismatches=" << t->count(FindingKind::ValueMismatch)
        << " extra=" << t->count(FindingKind::Extra) << " missing=" << t->count(FindingKind::Missing)
        << " duplicates=" << t->count(FindingKind::Duplicate) << "\n";
    for (const auto& f : t->discrepancies()) {
      out << "table=" << t->name << " finding=" << finding_name(f.kind) << " n=" << f.n << " printed=" << join(f.printed)
          << " computed=" << join(f.computed) << " confidence=" << (f.low_confidence ? "low" : "normal") << "\n";
    }
  }
}

}  // namespace wrh
