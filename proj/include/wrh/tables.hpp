#pragma once

// Published tables of weak numbers below 10000 (base 10), embedded verbatim,
// and their comparison with a fresh scan.

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wrh/solvers.hpp"

namespace wrh {

struct TableRow {
  Word n;
  std::vector<Word> terms;   // as printed
  bool low_confidence;       // transcription doubt (misplaced, duplicated or malformed row)
};

/// Additive table: one printed extra term per row, in printed column order.
std::span<const TableRow> additive_table();
/// Multiplicative table: every printed extra term per row.
std::span<const TableRow> multiplicative_table();

enum class FindingKind {
  Match,          // printed row agrees with the computed set
  ValueMismatch,  // number is a member, printed terms disagree
  Extra,          // printed, but not a member
  Missing,        // member, but not printed
  Duplicate,      // number printed more than once; later rows only
};

std::string_view finding_name(FindingKind kind);

struct Finding {
  FindingKind kind = FindingKind::Match;
  Word n = 0;
  std::vector<Word> printed;
  std::vector<Word> computed;
  bool low_confidence = false;
};

struct TableComparison {
  std::string name;          // "additive" or "multiplicative"
  Mode mode = Mode::AdditiveWeak;
  std::size_t caption_count = 0;   // count the table heading claims
  std::size_t intro_count = 0;    // count the introduction attaches to this class
  std::size_t printed_rows = 0;
  std::size_t computed_count = 0;
  std::vector<Finding> findings;  // printed order, then missing numbers ascending

  std::size_t count(FindingKind kind) const;
  /// Every finding other than Match.
  std::vector<Finding> discrepancies() const;
};

/// Additive rows match when the printed term is in the computed set;
/// multiplicative rows need the sets to be equal.
TableComparison compare_table(std::span<const TableRow> rows, Mode mode,
                              const std::vector<ClassificationRecord>& records);

struct DiscrepancyReport {
  std::vector<std::string> header;  // count findings, one statement per line
  TableComparison additive;
  TableComparison multiplicative;

  bool has_discrepancies() const;
};

/// Scans [0, 10000) in base 10 in both weak modes and compares.
DiscrepancyReport reproduce_tables(int workers = 1);

void write_text(std::ostream& out, const DiscrepancyReport& report);
void write_kv(std::ostream& out, const DiscrepancyReport& report);

}  // namespace wrh
