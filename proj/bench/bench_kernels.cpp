#include <random>

#include <benchmark/benchmark.h>

#include "indexlab/morse.hpp"
#include "indexlab/prover.hpp"
#include "support/random_models.hpp"

using namespace indexlab;

namespace {

std::vector<GeodesicModel> model_set(int n, int count) {
  std::mt19937_64 rng(7);
  return testsupport::random_model_set(rng, n, count);
}

void BM_MorseNumbers(benchmark::State& state) {
  const auto set = model_set(6, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(morse_numbers(set, 400));
}

void BM_MorseNumbersSerial(benchmark::State& state) {
  const auto set = model_set(6, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(morse_numbers_serial(set, 400));
}

void BM_ReplayRange(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(replay_range(2, static_cast<int>(state.range(0))));
}

void BM_ReplayRangeSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(replay_range_serial(2, static_cast<int>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_MorseNumbers)->Arg(8)->Arg(64);
BENCHMARK(BM_MorseNumbersSerial)->Arg(8)->Arg(64);
BENCHMARK(BM_ReplayRange)->Arg(50)->Arg(200);
BENCHMARK(BM_ReplayRangeSerial)->Arg(50)->Arg(200);

BENCHMARK_MAIN();
