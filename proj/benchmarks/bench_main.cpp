#include <benchmark/benchmark.h>

#include <random>

#include "circle5/cohomology.hpp"
#include "circle5/construct.hpp"
#include "circle5/orbit_local.hpp"
#include "circle5/sasakian.hpp"

using namespace circle5;

static void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> d(-50, 50);
  IntMatrix a(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a(r, c) = d(rng);
  }
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(a));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

static void BM_CoverSearchDegreeFamily(benchmark::State& state) {
  std::vector<BigInt> v;
  for (std::int64_t i = 3; i <= state.range(0); ++i) v.push_back((i - 1) * (i - 2));
  for (auto _ : state) benchmark::DoNotOptimize(quadratic_cover_search(v, 10));
}
BENCHMARK(BM_CoverSearchDegreeFamily)->Arg(6)->Arg(12)->Arg(20);

static void BM_CoverSearchStaircase(benchmark::State& state) {
  std::vector<BigInt> v;
  for (std::int64_t i = 1; i <= state.range(0); ++i) v.push_back(2 * i);
  for (auto _ : state) benchmark::DoNotOptimize(sasaki_check(v));
}
BENCHMARK(BM_CoverSearchStaircase)->Arg(10)->Arg(17)->Arg(30);

static void BM_ConstructAndVerify(benchmark::State& state) {
  ConstructionInput in{static_cast<std::size_t>(state.range(0)), {}, WuInvariant::infinity()};
  in.counts[PrimePower(2, 1)] = 2;
  in.counts[PrimePower(3, 2)] = 4;
  in.counts[PrimePower(7, 1)] = 2;
  for (auto _ : state) benchmark::DoNotOptimize(verify_roundtrip(in));
}
BENCHMARK(BM_ConstructAndVerify)->Arg(1)->Arg(4)->Arg(8);

static void BM_LocalInvariants(benchmark::State& state) {
  const StabilizerRep rep(2 * 3 * 5 * 7, {BigInt(15), BigInt(21), BigInt(35)});
  for (auto _ : state) benchmark::DoNotOptimize(local_invariants(rep));
}
BENCHMARK(BM_LocalInvariants);
BENCHMARK_MAIN();
