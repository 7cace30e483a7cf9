#include <benchmark/benchmark.h>

#include "staircase/cauchy.hpp"
#include "staircase/rational.hpp"
#include "staircase/series.hpp"

namespace {

using staircase::Rational;

// one full series evaluation; terms double per precision step while the
// per-term shift doubles too, so expect roughly 4x per step
void BM_EvalRational(benchmark::State& state) {
  const Rational x(1, 3);
  const unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(staircase::eval_f_rational(x, n));
  }
  state.SetComplexityN(static_cast<std::int64_t>(1) << (n + 2));
}
BENCHMARK(BM_EvalRational)->DenseRange(4, 13)->Complexity();

void BM_EvalOracle(benchmark::State& state) {
  const Rational x(5, 7);
  const unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    auto phi = staircase::make_dithered_oracle(x, 7);
    benchmark::DoNotOptimize(staircase::eval_f_oracle(phi, n));
  }
}
BENCHMARK(BM_EvalOracle)->DenseRange(4, 10);

void BM_Stair(benchmark::State& state) {
  const Rational x(9, 16);
  const std::uint64_t q = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(staircase::stair(q, x));
  }
}
BENCHMARK(BM_Stair)->RangeMultiplier(4)->Range(1, 1 << 14);

void BM_RoundToDyadic(benchmark::State& state) {
  const Rational x(355, 113);
  const unsigned k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(staircase::round_to_dyadic(x, k));
  }
}
BENCHMARK(BM_RoundToDyadic)->Arg(16)->Arg(64)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
