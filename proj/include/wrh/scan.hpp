#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "wrh/solvers.hpp"

namespace wrh {

/// Half-open range [lo, hi) to classify.
struct ScanRequest {
  Base base = kDecimal;
  Word lo = 0;
  Word hi = 0;
  ModeSet modes = ModeSet::all();
  std::size_t chunk_size = 4096;
  int workers = 1;

  /// Throws std::invalid_argument unless lo < hi, chunk_size >= 1 and
  /// workers >= 1.
  void validate() const;
};

using RecordSink = std::function<void(const ClassificationRecord&)>;

/// Classifies every n in the range on `workers` OpenMP threads and hands
/// the records to `sink` in ascending n. Work is cut into contiguous chunks;
/// a batch of chunks is computed in parallel, then drained in order, so the
/// output does not depend on chunk size or worker count.
void scan(const ScanRequest& request, const RecordSink& sink);

/// Single-threaded reference for scan: same records, same order.
void scan_serial(const ScanRequest& request, const RecordSink& sink);

std::vector<ClassificationRecord> scan_all(const ScanRequest& request);

/// Members of one mode as a 1-indexed sequence.
struct SequenceResult {
  Base base = kDecimal;
  Mode mode = Mode::AdditiveWeak;
  Word lo = 0;
  Word hi = 0;
  std::vector<std::pair<std::size_t, Word>> terms;  // (index from 1, n)
};

SequenceResult make_sequence(const std::vector<ClassificationRecord>& records, Mode mode, Word lo, Word hi, Base base);

/// Scans for one mode and keeps its members.
SequenceResult collect_sequence(ScanRequest request, Mode mode);

/// Worker count from the WRH_JOBS environment variable, else 1.
int default_workers();

}  // namespace wrh
