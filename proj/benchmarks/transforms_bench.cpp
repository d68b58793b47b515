#include <benchmark/benchmark.h>

#include "qharmonics/fixtures.hpp"
#include "qharmonics/qft.hpp"
#include "qharmonics/qlct.hpp"

namespace {

using namespace qh;

QSignal2D gaussian_signal(std::size_t n, double extent) {
  return sample(fixtures::gaussian(), GridSpec::centered(n, extent));
}

void BM_QftQuadrature(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const QSignal2D f = gaussian_signal(n, 12.0);
  const GridSpec og = fft_frequency_grid(f.grid());
  for (auto _ : state) benchmark::DoNotOptimize(qft_forward(f, {}, og));
}
BENCHMARK(BM_QftQuadrature)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_QftFast(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const QSignal2D f = gaussian_signal(n, 12.0);
  for (auto _ : state) benchmark::DoNotOptimize(qft_fast(f, {}));
}
BENCHMARK(BM_QftFast)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

const LctKind kShearKind{Side::TwoSided, LctParams::make(1, 1, 0, 1), LctParams::make(1, 1, 0, 1)};

void BM_QlctDirect(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const QSignal2D f = gaussian_signal(n, 8.0);
  const GridSpec og = qlct_via_qft_fast(f, kShearKind).grid();
  for (auto _ : state) benchmark::DoNotOptimize(qlct_forward(f, kShearKind, og));
}
BENCHMARK(BM_QlctDirect)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_QlctViaFastQft(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const QSignal2D f = gaussian_signal(n, 8.0);
  for (auto _ : state) benchmark::DoNotOptimize(qlct_via_qft_fast(f, kShearKind));
}
BENCHMARK(BM_QlctViaFastQft)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
