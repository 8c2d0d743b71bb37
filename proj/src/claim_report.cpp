#include "wrh/claim_report.hpp"

#include <algorithm>
#include <ostream>

namespace wrh {

namespace {

// Tabs and newlines would break the line-oriented formats.
std::string sanitize(std::string_view s) {
  std::string out(s);
  std::replace(out.begin(), out.end(), '\t', ' ');
  std::replace(out.begin(), out.end(), '\n', ' ');
  return out;
}

}  // namespace

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "fail";
    case Verdict::NotApplicable:
      break;
  }
  return "not-applicable";
}

void ClaimReport::add(std::string params, Verdict verdict, std::string detail) {
  instances.push_back(ClaimInstance{std::move(params), verdict, std::move(detail)});
  line_ids_.push_back(claim_id);
}

std::size_t ClaimReport::count(Verdict v) const {
  return static_cast<std::size_t>(
      std::count_if(instances.begin(), instances.end(), [v](const ClaimInstance& i) { return i.verdict == v; }));
}

std::vector<ClaimInstance> ClaimReport::counterexamples() const {
  std::vector<ClaimInstance> out;
  std::copy_if(instances.begin(), instances.end(), std::back_inserter(out),
               [](const ClaimInstance& i) { return i.verdict == Verdict::Fail; });
  return out;
}

void ClaimReport::merge(const ClaimReport& other) {
  for (std::size_t i = 0; i < other.instances.size(); ++i) {
    instances.push_back(other.instances[i]);
    line_ids_.push_back(i < other.line_ids_.size() ? other.line_ids_[i] : other.claim_id);
  }
}

void write_tsv(std::ostream& out, const ClaimReport& report) {
  for (std::size_t i = 0; i < report.instances.size(); ++i) {
    const auto& inst = report.instances[i];
    const std::string& id = i < report.line_ids_.size() ? report.line_ids_[i] : report.claim_id;
    out << sanitize(id) << '\t' << sanitize(inst.params) << '\t' << verdict_name(inst.verdict) << '\t'
        << sanitize(inst.detail) << '\n';
  }
}

void write_text(std::ostream& out, const ClaimReport& report) {
  out << "claim " << report.claim_id << " over " << report.range << ": " << report.count(Verdict::Pass) << " pass, "
      << report.count(Verdict::Fail) << " fail, " << report.count(Verdict::NotApplicable) << " not applicable\n";
  for (const auto& inst : report.instances) {
    if (inst.verdict == Verdict::Pass) {
      continue;
    }
    out << "  [" << verdict_name(inst.verdict) << "] " << inst.params;
    if (!inst.detail.empty()) {
      out << ": " << inst.detail;
    }
    out << '\n';
  }
}

void write_kv(std::ostream& out, const ClaimReport& report) {
  out << "claim=" << sanitize(report.claim_id) << " range=" << sanitize(report.range)
      << " pass=" << report.count(Verdict::Pass) << " fail=" << report.count(Verdict::Fail)
      << " not_applicable=" << report.count(Verdict::NotApplicable) << '\n';
  for (const auto& inst : report.instances) {
    out << "params=" << sanitize(inst.params) << "\tverdict=" << verdict_name(inst.verdict)
        << "\tdetail=" << sanitize(inst.detail) << '\n';
  }
}

}  // namespace wrh
