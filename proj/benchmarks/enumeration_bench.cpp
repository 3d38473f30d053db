#include <benchmark/benchmark.h>

#include "avop/averaging.hpp"
#include "avop/group.hpp"

using namespace avop;

static void BM_EnumerateAveragingFlip(benchmark::State& state) {
  FiniteMagma q = flip_rack((int)state.range(0));
  EnumOptions opt;
  opt.parallel = false;
  for (auto _ : state) {
    auto out = enumerate_averaging(q, opt);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_EnumerateAveragingFlip)->Arg(4)->Arg(5)->Arg(6);

static void BM_EnumerateAveragingS3(benchmark::State& state) {
  FiniteGroup s3 = symmetric_group(3);
  EnumOptions opt;
  opt.parallel = state.range(0) != 0;
  for (auto _ : state) {
    auto out = enumerate_averaging(s3, opt);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_EnumerateAveragingS3)->Arg(0)->Arg(1);

static void BM_AutomorphismGroup(benchmark::State& state) {
  FiniteGroup g = symmetric_group(4);
  for (auto _ : state) {
    auto out = automorphism_group(g, 24);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_AutomorphismGroup);
