#include <benchmark/benchmark.h>

#include "wrh/reference.hpp"
#include "wrh/scan.hpp"

namespace {

wrh::ScanRequest request(wrh::Word hi, int workers) {
  wrh::ScanRequest r;
  r.lo = 0;
  r.hi = hi;
  r.workers = workers;
  r.modes = wrh::ModeSet{wrh::Mode::AdditiveWeak, wrh::Mode::MultiplicativeWeak};
  return r;
}

void BM_ScanSerial(benchmark::State& state) {
  const auto req = request(static_cast<wrh::Word>(state.range(0)), 1);
  for (auto _ : state) {
    std::size_t members = 0;
    wrh::scan_serial(req, [&](const wrh::ClassificationRecord& r) { members += !r.warh_terms.empty(); });
    benchmark::DoNotOptimize(members);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ScanSerial)->Arg(20000)->Unit(benchmark::kMillisecond);

void BM_ScanParallel(benchmark::State& state) {
  const auto req = request(static_cast<wrh::Word>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) {
    std::size_t members = 0;
    wrh::scan(req, [&](const wrh::ClassificationRecord& r) { members += !r.warh_terms.empty(); });
    benchmark::DoNotOptimize(members);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ScanParallel)->Args({20000, 1})->Args({20000, 2})->Args({20000, 4})->Args({20000, 8})
    ->Unit(benchmark::kMillisecond)->UseRealTime();

// Digit/carry search against the literal T-scan, one n at a time.
void BM_WarhFast(benchmark::State& state) {
  const wrh::Base b(10);
  const auto n = static_cast<wrh::Word>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(wrh::warh_witnesses(n, b));
  }
}
BENCHMARK(BM_WarhFast)->Arg(9999)->Arg(121212)->Arg(99999999);

void BM_WarhReference(benchmark::State& state) {
  const wrh::Base b(10);
  const auto n = static_cast<wrh::Word>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(wrh::reference::warh_witnesses_scan(n, b));
  }
}
BENCHMARK(BM_WarhReference)->Arg(9999)->Arg(121212);

}  // namespace

BENCHMARK_MAIN();
