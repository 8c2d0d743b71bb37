#include "wrh/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <random>

#include "wrh/checks.hpp"
#include "wrh/digits.hpp"
#include "wrh/families.hpp"
#include "wrh/inverse.hpp"
#include "wrh/io.hpp"
#include "wrh/scan.hpp"
#include "wrh/tables.hpp"

namespace wrh::cli {

namespace {

struct Options {
  int base = 10;
  bool show_digits = false;

  // classify / witnesses
  std::vector<Word> numbers;
  std::string mode = "warh";
  std::string format = "text";

  // extra-term
  std::string extra_term;
  std::string op = "add";

  // scan
  Word lo = 0;
  Word hi = 0;
  std::vector<std::string> modes{"warh"};
  std::string out_format = "text";
  int jobs = 1;
  std::string store;
  std::size_t chunk = 4096;

  // family
  std::string family;
  std::optional<std::size_t> k;
  std::optional<std::size_t> p;
  std::string i_digits;
  std::size_t count = 1;
  bool verify = false;
  std::size_t budget = 256;

  // check
  std::string suite;
  std::optional<Word> limit;
  std::uint64_t seed = 1;
};

std::string decimal_and_digits(const Natural& n, Base base, bool show) {
  std::string s = n.str();
  if (show) {
    s += " [" + to_digits(n, base).str() + "]_" + std::to_string(base.value());
  }
  return s;
}

int report_exit(bool failures) { return failures ? kExitFindings : kExitOk; }

int emit_report(std::ostream& out, const ClaimReport& report, const std::string& format) {
  if (format == "kv") {
    write_kv(out, report);
  } else if (format == "tsv") {
    write_tsv(out, report);
  } else {
    write_text(out, report);
  }
  return report_exit(report.has_failures());
}

int cmd_classify(const Options& o, std::ostream& out) {
  const Base base(o.base);
  for (Word n : o.numbers) {
    const auto rec = classify(n, base);
    out << (o.format == "json" ? record_json(rec) : format_record(rec, o.show_digits)) << '\n';
  }
  return kExitOk;
}

int cmd_witnesses(const Options& o, std::ostream& out) {
  const Base base(o.base);
  const Mode mode = parse_mode(o.mode);
  const char* var = is_weak(mode) ? "A" : "M";
  for (Word n : o.numbers) {
    const auto w = witnesses(n, base, mode);
    out << decimal_and_digits(n, base, o.show_digits) << ": " << var << " ∈ " << format_set(w.witnesses) << '\n';
  }
  return kExitOk;
}

int cmd_extra_term(const Options& o, std::ostream& out) {
  const Base base(o.base);
  const Mode mode = o.op == "mul" ? Mode::MultiplicativeWeak : Mode::AdditiveWeak;
  Natural a;
  try {
    a = Natural(o.extra_term);
  } catch (const std::exception&) {
    throw std::invalid_argument("extra term must be a nonnegative decimal integer: " + o.extra_term);
  }
  const auto res = solve_extra_term(a, base, mode);
  out << "A=" << a.str() << " base=" << base.value() << " mode=" << o.op << ": N ∈ {";
  for (std::size_t i = 0; i < res.instances.size(); ++i) {
    out << (i ? ", " : "") << decimal_and_digits(res.instances[i], base, o.show_digits);
  }
  out << "}\n";
  if (const auto bound = stated_digit_bound(a, base, mode)) {
    const bool plus5 = mode == Mode::MultiplicativeWeak && base.value() < 6;
    out << "digit bound: k <= A+" << (plus5 ? 5 : 4) << " = " << bound->str() << '\n';
  }
  out << "searched digit sums 1.." << res.s_scanned.str() << " (cap " << res.s_cap.str() << "), "
      << res.tail_blocks << " tail blocks certified\n";
  if (res.instances.empty()) {
    out << a.str() << " is not " << (mode == Mode::MultiplicativeWeak ? "a multiplicative" : "an additive")
        << " extra term in base " << base.value() << '\n';
  }
  return kExitOk;
}

int cmd_scan(const Options& o, std::ostream& out) {
  ScanRequest req;
  req.base = Base(o.base);
  req.lo = o.lo;
  req.hi = o.hi;
  req.workers = o.jobs;
  req.chunk_size = o.chunk;
  req.modes = ModeSet{};
  std::vector<Mode> modes;
  for (const auto& m : o.modes) {
    modes.push_back(parse_mode(m));
    req.modes.insert(modes.back());
  }
  req.validate();
  if (o.out_format == "bfile" && modes.size() != 1) {
    throw std::invalid_argument("--out bfile needs exactly one --mode");
  }

  std::unique_ptr<std::ofstream> store_file;
  std::unique_ptr<StoreWriter> store;
  if (!o.store.empty()) {
    store_file = std::make_unique<std::ofstream>(o.store, std::ios::binary);
    if (!*store_file) {
      throw std::runtime_error("cannot open " + o.store + " for writing");
    }
    store = std::make_unique<StoreWriter>(*store_file);
  }
  std::unique_ptr<StoreWriter> csv;
  if (o.out_format == "csv") {
    csv = std::make_unique<StoreWriter>(out);
  }

  std::size_t index = 0;
  bool first_json = true;
  if (o.out_format == "json") {
    out << "[";
  }
  scan(req, [&](const ClassificationRecord& rec) {
    if (store) {
      store->write(rec);
    }
    if (csv) {
      csv->write(rec);
      return;
    }
    const bool member = std::any_of(modes.begin(), modes.end(), [&](Mode m) { return !rec.witnesses(m).empty(); });
    if (!member) {
      return;
    }
    if (o.out_format == "bfile") {
      out << ++index << ' ' << rec.n << '\n';
    } else if (o.out_format == "json") {
      out << (first_json ? "\n" : ",\n") << record_json(rec);
      first_json = false;
    } else {
      out << format_record(rec, o.show_digits) << '\n';
    }
  });
  if (o.out_format == "json") {
    out << "\n]\n";
  }
  if (store_file && !store_file->flush()) {
    throw std::runtime_error("write failed: " + o.store);
  }
  return kExitOk;
}

int cmd_family(const Options& o, std::ostream& out) {
  FamilySpec spec;
  spec.id = parse_family(o.family);
  spec.base = Base(o.base);
  spec.params.k = o.k;
  spec.params.p = o.p;
  spec.claim_budget = o.budget;
  if (!o.i_digits.empty()) {
    std::vector<int> digits;
    for (char c : o.i_digits) {
      digits.push_back(parse_digits(std::string_view(&c, 1), spec.base)[0]);
    }
    spec.params.i = digits;
  }
  if (o.verify) {
    return emit_report(out, verify_family(spec, o.count), o.format);
  }
  for (const auto& m : generate(spec, o.count)) {
    out << m.label << ": " << decimal_and_digits(m.n, spec.base, o.show_digits) << '\n';
    for (const auto& c : m.claims) {
      out << "  claim " << claim_kind_name(c.kind);
      if (c.kind != ClaimKind::WarhMember && c.kind != ClaimKind::NotNiven && c.kind != ClaimKind::NotMrh) {
        out << ' ' << c.value.str();
      }
      if (c.kind == ClaimKind::ProgressionStep) {
        out << " step " << c.other.str();
      }
      out << '\n';
    }
  }
  return kExitOk;
}

std::vector<Natural> inequality_sample(Base base, std::size_t random_count, std::uint64_t seed) {
  std::vector<Natural> sample;
  const Word b = base.word();
  for (Word n = b * b; n < b * b * b; ++n) {
    sample.emplace_back(n);
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Word> dist(b, Word{1} << 62);
  for (std::size_t i = 0; i < random_count; ++i) {
    sample.emplace_back(dist(rng));
  }
  return sample;
}

int cmd_check(const Options& o, std::ostream& out) {
  const Base base(o.base);
  if (o.suite == "tables") {
    const auto rep = reproduce_tables(o.jobs);
    if (o.format == "kv") {
      write_kv(out, rep);
    } else {
      write_text(out, rep);
    }
    return report_exit(rep.has_discrepancies());
  }
  if (o.suite == "zero-term") {
    return emit_report(out, check_zero_term_theorem(base), o.format);
  }
  if (o.suite == "bounds") {
    return emit_report(out, check_bound_theorems(base, o.limit.value_or(100000), o.jobs), o.format);
  }
  if (o.suite == "inequalities") {
    const auto sample = inequality_sample(base, static_cast<std::size_t>(o.limit.value_or(10000)), o.seed);
    return emit_report(out, check_digit_inequalities(base, sample), o.format);
  }
  if (o.suite == "growth") {
    return emit_report(out, check_growth(base, static_cast<std::size_t>(o.limit.value_or(1)), o.budget), o.format);
  }
  throw std::invalid_argument("unknown suite " + o.suite);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weak Ramanujan-Hardy numbers in bases 2-36", "wrh"};
  app.require_subcommand(1);
  Options o;
  o.jobs = default_workers();

  const auto base_opt = [&](CLI::App* sub) {
    sub->add_option("--base,-b", o.base, "numeration base")->check(CLI::Range(2, 36));
    sub->add_flag("--show-digits", o.show_digits, "also print base-b digit strings");
  };
  const auto jobs_opt = [&](CLI::App* sub) {
    sub->add_option("--jobs,-j", o.jobs, "worker threads (default $WRH_JOBS or 1)")->check(CLI::PositiveNumber);
  };
  const std::vector<std::string> mode_names{"warh", "wmrh", "arh", "mrh"};

  auto* classify_cmd = app.add_subcommand("classify", "classify numbers in every mode");
  base_opt(classify_cmd);
  classify_cmd->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));
  classify_cmd->add_option("N", o.numbers)->required();

  auto* witness_cmd = app.add_subcommand("witnesses", "witness set of N in one mode");
  base_opt(witness_cmd);
  witness_cmd->add_option("--mode,-m", o.mode)->check(CLI::IsMember(mode_names));
  witness_cmd->add_option("N", o.numbers)->required();

  auto* extra_cmd = app.add_subcommand("extra-term", "every N having extra term A");
  base_opt(extra_cmd);
  extra_cmd->add_option("--mode,-m", o.op)->check(CLI::IsMember({"add", "mul"}));
  extra_cmd->add_option("A", o.extra_term)->required();

  auto* scan_cmd = app.add_subcommand("scan", "classify the range [lo, hi)");
  base_opt(scan_cmd);
  jobs_opt(scan_cmd);
  scan_cmd->add_option("--lo", o.lo);
  scan_cmd->add_option("--hi", o.hi)->required();
  scan_cmd->add_option("--mode,-m", o.modes)->delimiter(',')->check(CLI::IsMember(mode_names));
  scan_cmd->add_option("--out", o.out_format)->check(CLI::IsMember({"text", "csv", "json", "bfile"}));
  scan_cmd->add_option("--store", o.store, "also write every record to this CSV store");
  scan_cmd->add_option("--chunk", o.chunk)->check(CLI::PositiveNumber);

  auto* family_cmd = app.add_subcommand("family", "generate or verify a constructive family");
  base_opt(family_cmd);
  family_cmd->add_option("--id", o.family)->required()->check(
      CLI::IsMember({"F1", "F2", "F3", "F4", "F5", "F6", "F7", "F8"}));
  family_cmd->add_option("--k", o.k);
  family_cmd->add_option("--p", o.p);
  family_cmd->add_option("--i", o.i_digits, "digit string I for F6");
  family_cmd->add_option("--count", o.count)->check(CLI::PositiveNumber);
  family_cmd->add_option("--budget", o.budget, "claims enumerated per member (F7, F8)");
  family_cmd->add_flag("--verify", o.verify);
  family_cmd->add_option("--format", o.format)->check(CLI::IsMember({"text", "kv", "tsv"}));

  auto* check_cmd = app.add_subcommand("check", "audit stated claims");
  base_opt(check_cmd);
  jobs_opt(check_cmd);
  check_cmd->add_option("--suite", o.suite)->required()->check(
      CLI::IsMember({"bounds", "zero-term", "inequalities", "growth", "tables"}));
  check_cmd->add_option("--limit", o.limit, "bounds: N range; inequalities: random samples; growth: p count");
  check_cmd->add_option("--seed", o.seed);
  check_cmd->add_option("--budget", o.budget);
  check_cmd->add_option("--format", o.format)->check(CLI::IsMember({"text", "kv", "tsv"}));

  std::vector<std::string> argv_store{"wrh"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) {
    argv.push_back(a.c_str());
  }

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "wrh: " << e.what() << '\n';
    const auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return kExitUsage;
  }

  try {
    if (*classify_cmd) return cmd_classify(o, out);
    if (*witness_cmd) return cmd_witnesses(o, out);
    if (*extra_cmd) return cmd_extra_term(o, out);
    if (*scan_cmd) return cmd_scan(o, out);
    if (*family_cmd) return cmd_family(o, out);
    if (*check_cmd) return cmd_check(o, out);
  } catch (const std::exception& e) {
    err << "wrh: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace wrh::cli
