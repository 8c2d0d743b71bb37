#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace wrh {

enum class Verdict { Pass, Fail, NotApplicable };

std::string_view verdict_name(Verdict v);

struct ClaimInstance {
  std::string params;
  Verdict verdict = Verdict::NotApplicable;
  std::string detail;  // for failures: both sides of the violated relation

  friend bool operator==(const ClaimInstance&, const ClaimInstance&) = default;
};

/// Outcome of checking one stated claim over a finite parameter range.
struct ClaimReport {
  ClaimReport() = default;
  ClaimReport(std::string id, std::string range_) : claim_id(std::move(id)), range(std::move(range_)) {}

  std::string claim_id;
  std::string range;
  std::vector<ClaimInstance> instances;

  void add(std::string params, Verdict verdict, std::string detail);
  void pass(std::string params, std::string detail = {}) { add(std::move(params), Verdict::Pass, std::move(detail)); }
  void fail(std::string params, std::string detail) { add(std::move(params), Verdict::Fail, std::move(detail)); }
  void skip(std::string params, std::string detail) {
    add(std::move(params), Verdict::NotApplicable, std::move(detail));
  }

  std::size_t count(Verdict v) const;
  bool has_failures() const { return count(Verdict::Fail) != 0; }
  std::vector<ClaimInstance> counterexamples() const;

  /// Appends other's instances; claim ids are kept per line in the TSV form.
  void merge(const ClaimReport& other);

  friend bool operator==(const ClaimReport&, const ClaimReport&) = default;

 private:
  std::vector<std::string> line_ids_;  // claim id per instance after merges

  friend void write_tsv(std::ostream&, const ClaimReport&);
};

/// One line per instance: claim-id TAB params TAB verdict TAB detail.
void write_tsv(std::ostream& out, const ClaimReport& report);

/// Summary plus every non-passing instance.
void write_text(std::ostream& out, const ClaimReport& report);

/// key=value lines: a summary line then one line per instance.
void write_kv(std::ostream& out, const ClaimReport& report);

}  // namespace wrh
