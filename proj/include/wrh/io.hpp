#pragma once

// b-files, the CSV record store, and the text/JSON renderings of records.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "wrh/scan.hpp"
#include "wrh/solvers.hpp"

namespace wrh {

/// "<index> <value>\n" per term, no header.
void write_bfile(std::ostream& out, const SequenceResult& seq);
/// Throws std::runtime_error naming the path when the file can't be written.
void export_bfile(const SequenceResult& seq, const std::filesystem::path& path);

inline constexpr const char* kStoreHeader = "n,base,s,palindrome,niven,warh,wmrh,arh,mrh";

/// One store row without the trailing newline; witness lists joined by ';'.
std::string store_row(const ClassificationRecord& rec);
/// Inverse of store_row; line is only used in the FormatError.
ClassificationRecord parse_store_row(const std::string& row, std::size_t line);

/// Streams rows as they arrive. Callers feeding it from scan get (base, n)
/// order for free; persist() sorts.
class StoreWriter {
 public:
  explicit StoreWriter(std::ostream& out);
  void write(const ClassificationRecord& rec);

 private:
  std::ostream* out_;
};

void persist(std::ostream& out, std::vector<ClassificationRecord> records);
void persist(const std::filesystem::path& path, std::vector<ClassificationRecord> records);

/// Throws FormatError with a 1-based line number on malformed input. An
/// empty stream or header-only store gives an empty list.
std::vector<ClassificationRecord> load(std::istream& in);
std::vector<ClassificationRecord> load(const std::filesystem::path& path);

/// "{18, 45}"
std::string format_set(const std::vector<Word>& values);

/// One human-readable line per record. With show_digits the base-b digit
/// string is appended to n.
std::string format_record(const ClassificationRecord& rec, bool show_digits);

/// Single-line JSON object for a record.
std::string record_json(const ClassificationRecord& rec);

}  // namespace wrh
