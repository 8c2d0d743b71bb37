#include "wrh/scan.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <stdexcept>
#include <string>

namespace wrh {

void ScanRequest::validate() const {
  if (lo >= hi) {
    throw std::invalid_argument("scan range must satisfy lo < hi");
  }
  if (chunk_size < 1) {
    throw std::invalid_argument("chunk size must be at least 1");
  }
  if (workers < 1) {
    throw std::invalid_argument("worker count must be at least 1");
  }
}

void scan(const ScanRequest& request, const RecordSink& sink) {
  request.validate();
  const Word chunk = request.chunk_size;
  const std::size_t batch = static_cast<std::size_t>(request.workers) * 4;
  std::vector<std::vector<ClassificationRecord>> slots(batch);
  std::vector<std::exception_ptr> errors(batch);

  Word start = request.lo;
  while (start < request.hi) {
    const Word remaining = request.hi - start;
    const std::size_t chunks = static_cast<std::size_t>(std::min<Word>(batch, (remaining + chunk - 1) / chunk));

#pragma omp parallel for num_threads(request.workers) schedule(dynamic, 1)
    for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(chunks); ++c) {
      auto& slot = slots[static_cast<std::size_t>(c)];
      slot.clear();
      try {
        const Word first = start + static_cast<Word>(c) * chunk;
        const Word last = first + std::min(chunk, request.hi - first);
        for (Word n = first; n < last; ++n) {
          slot.push_back(classify(n, request.base, request.modes));
        }
      } catch (...) {
        errors[static_cast<std::size_t>(c)] = std::current_exception();
      }
    }

    for (std::size_t c = 0; c < chunks; ++c) {
      if (errors[c]) {
        std::rethrow_exception(errors[c]);
      }
      for (const auto& rec : slots[c]) {
        sink(rec);
      }
    }
    start += std::min<Word>(remaining, static_cast<Word>(chunks) * chunk);
  }
}

void scan_serial(const ScanRequest& request, const RecordSink& sink) {
  request.validate();
  for (Word n = request.lo; n < request.hi; ++n) {
    sink(classify(n, request.base, request.modes));
  }
}

std::vector<ClassificationRecord> scan_all(const ScanRequest& request) {
  std::vector<ClassificationRecord> out;
  scan(request, [&](const ClassificationRecord& r) { out.push_back(r); });
  return out;
}

SequenceResult make_sequence(const std::vector<ClassificationRecord>& records, Mode mode, Word lo, Word hi,
                             Base base) {
  SequenceResult seq{base, mode, lo, hi, {}};
  for (const auto& r : records) {
    if (!r.witnesses(mode).empty()) {
      seq.terms.emplace_back(seq.terms.size() + 1, r.n);
    }
  }
  return seq;
}

SequenceResult collect_sequence(ScanRequest request, Mode mode) {
  request.modes = ModeSet{mode};
  SequenceResult seq{request.base, mode, request.lo, request.hi, {}};
  scan(request, [&](const ClassificationRecord& r) {
    if (!r.witnesses(mode).empty()) {
      seq.terms.emplace_back(seq.terms.size() + 1, r.n);
    }
  });
  return seq;
}

int default_workers() {
  if (const char* env = std::getenv("WRH_JOBS"); env != nullptr && *env != '\0') {
    try {
      const int jobs = std::stoi(env);
      if (jobs >= 1) {
        return jobs;
      }
    } catch (const std::exception&) {
    }
  }
  return 1;
}

}  // namespace wrh
