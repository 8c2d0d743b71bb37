#include "wrh/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <tuple>

#include <json.hpp>

#include "wrh/digits.hpp"

namespace wrh {

namespace {

std::string join_semicolon(const std::vector<Word>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) {
      s += ';';
    }
    s += std::to_string(v[i]);
  }
  return s;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

Word parse_word(const std::string& field, std::size_t line, const char* what) {
  Word v = 0;
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, v);
  if (field.empty() || ec != std::errc() || ptr != end) {
    throw FormatError(line, std::string("bad ") + what + " field '" + field + "'");
  }
  return v;
}

bool parse_flag(const std::string& field, std::size_t line, const char* what) {
  if (field == "true") {
    return true;
  }
  if (field == "false") {
    return false;
  }
  throw FormatError(line, std::string("bad ") + what + " flag '" + field + "'");
}

std::vector<Word> parse_list(const std::string& field, std::size_t line, const char* what) {
  std::vector<Word> out;
  if (field.empty()) {
    return out;
  }
  for (const auto& part : split(field, ';')) {
    out.push_back(parse_word(part, line, what));
  }
  if (!std::is_sorted(out.begin(), out.end()) || std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw FormatError(line, std::string(what) + " list not strictly increasing");
  }
  return out;
}

void sort_records(std::vector<ClassificationRecord>& records) {
  std::stable_sort(records.begin(), records.end(), [](const auto& a, const auto& b) {
    return std::tuple(a.base.value(), a.n) < std::tuple(b.base.value(), b.n);
  });
}

}  // namespace

void write_bfile(std::ostream& out, const SequenceResult& seq) {
  for (const auto& [i, n] : seq.terms) {
    out << i << ' ' << n << '\n';
  }
}

void export_bfile(const SequenceResult& seq, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  }
  write_bfile(out, seq);
  if (!out.flush()) {
    throw std::runtime_error("write failed: " + path.string());
  }
}

std::string store_row(const ClassificationRecord& rec) {
  std::string row = std::to_string(rec.n) + ',' + std::to_string(rec.base.value()) + ',' +
                    std::to_string(rec.digit_sum) + ',' + (rec.is_palindrome ? "true" : "false") + ',' +
                    (rec.is_niven ? "true" : "false");
  for (Mode m : kAllModes) {
    row += ',' + join_semicolon(rec.witnesses(m).witnesses);
  }
  return row;
}

ClassificationRecord parse_store_row(const std::string& row, std::size_t line) {
  const auto f = split(row, ',');
  if (f.size() != 9) {
    throw FormatError(line, "expected 9 fields, got " + std::to_string(f.size()));
  }
  ClassificationRecord rec;
  rec.n = parse_word(f[0], line, "n");
  const Word b = parse_word(f[1], line, "base");
  if (b < 2 || b > 36) {
    throw FormatError(line, "base " + f[1] + " out of range");
  }
  rec.base = Base(static_cast<int>(b));
  rec.digit_sum = parse_word(f[2], line, "s");
  rec.is_palindrome = parse_flag(f[3], line, "palindrome");
  rec.is_niven = parse_flag(f[4], line, "niven");
  std::size_t col = 5;
  for (Mode m : kAllModes) {
    auto& w = rec.witnesses(m);
    w.n = rec.n;
    w.base = rec.base;
    w.mode = m;
    w.witnesses = parse_list(f[col++], line, std::string(mode_name(m)).c_str());
  }
  return rec;
}

StoreWriter::StoreWriter(std::ostream& out) : out_(&out) { *out_ << kStoreHeader << '\n'; }

void StoreWriter::write(const ClassificationRecord& rec) { *out_ << store_row(rec) << '\n'; }

void persist(std::ostream& out, std::vector<ClassificationRecord> records) {
  sort_records(records);
  StoreWriter w(out);
  for (const auto& r : records) {
    w.write(r);
  }
}

void persist(const std::filesystem::path& path, std::vector<ClassificationRecord> records) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  }
  persist(out, std::move(records));
  if (!out.flush()) {
    throw std::runtime_error("write failed: " + path.string());
  }
}

std::vector<ClassificationRecord> load(std::istream& in) {
  std::vector<ClassificationRecord> out;
  std::string row;
  std::size_t line = 0;
  while (std::getline(in, row)) {
    ++line;
    if (!row.empty() && row.back() == '\r') {
      row.pop_back();
    }
    if (line == 1) {
      if (row != kStoreHeader) {
        throw FormatError(line, "missing store header");
      }
      continue;
    }
    if (row.empty()) {
      continue;
    }
    out.push_back(parse_store_row(row, line));
  }
  return out;
}

std::vector<ClassificationRecord> load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open " + path.string());
  }
  return load(in);
}

std::string format_set(const std::vector<Word>& values) {
  std::string s = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    s += (i ? ", " : "") + std::to_string(values[i]);
  }
  return s + "}";
}

std::string format_record(const ClassificationRecord& rec, bool show_digits) {
  std::string line = std::to_string(rec.n);
  if (show_digits) {
    line += " [" + to_digits(rec.n, rec.base).str() + "]_" + std::to_string(rec.base.value());
  }
  line += ": s=" + std::to_string(rec.digit_sum);
  line += rec.is_palindrome ? " palindrome" : "";
  line += rec.is_niven ? " niven" : "";
  for (Mode m : kAllModes) {
    line += " " + std::string(mode_name(m)) + "=" + format_set(rec.witnesses(m).witnesses);
  }
  return line;
}

std::string record_json(const ClassificationRecord& rec) {
  nlohmann::ordered_json j;
  j["n"] = rec.n;
  j["base"] = rec.base.value();
  j["s"] = rec.digit_sum;
  j["palindrome"] = rec.is_palindrome;
  j["niven"] = rec.is_niven;
  for (Mode m : kAllModes) {
    j[std::string(mode_name(m))] = rec.witnesses(m).witnesses;
  }
  return j.dump();
}

}  // namespace wrh
