#include <benchmark/benchmark.h>

#include "cubicdet/counting.hpp"
#include "cubicdet/detrep.hpp"
#include "cubicdet/oracle.hpp"
#include "cubicdet/text.hpp"

using namespace cubicdet;

static void BM_FieldMul(benchmark::State& state) {
  const FieldSpec& f = mk_field(2, 10);
  std::uint32_t a = 3, b = 7;
  for (auto _ : state) {
    a = f.mul(a, b) | 1;
    b = f.add(b, a) | 2;
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_FieldMul);

static void BM_IsSmooth(benchmark::State& state) {
  const FieldSpec& f = parse_field(std::to_string(state.range(0)));
  const TernaryCubic g = parse_form(f, "X^2Z + XY^2 + YZ^2 + X^3 + Z^3");
  for (auto _ : state) benchmark::DoNotOptimize(is_smooth(g));
}
BENCHMARK(BM_IsSmooth)->Arg(2)->Arg(5)->Arg(7)->Arg(13);

static void BM_AllReps(benchmark::State& state) {
  const FieldSpec& f = parse_field("13");
  const TernaryCubic g = parse_form(f, "Y^2Z - X^3 - XZ^2 - Z^3");
  for (auto _ : state) benchmark::DoNotOptimize(all_reps(g));
}
BENCHMARK(BM_AllReps);

static void BM_Equivalent(benchmark::State& state) {
  const FieldSpec& f = parse_field(std::to_string(state.range(0)));
  const TernaryCubic g = parse_form(f, f.q() == 3 ? "X^2Z + XY^2 + YZ^2 + 2XYZ" : "Y^2Z - X^3 - XZ^2 - Z^3");
  const auto reps = all_reps(g);
  const auto method = state.range(1) ? EquivalenceOptions::Method::GroupScan : EquivalenceOptions::Method::Intertwiner;
  EquivalenceOptions o;
  o.method = method;
  for (auto _ : state) benchmark::DoNotOptimize(equivalent(reps[0].rep, reps[1].rep, o));
}
BENCHMARK(BM_Equivalent)->Args({3, 0})->Args({5, 0})->Args({13, 0})->Args({3, 1});

static void BM_Census2(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(census(2));
}
BENCHMARK(BM_Census2)->Unit(benchmark::kMillisecond);

static void BM_CubFormula(benchmark::State& state) {
  for (auto _ : state)
    for (long long q : {2, 3, 4, 5, 7, 8, 9, 11, 13})
      for (long long n = 0; n < 3; ++n) benchmark::DoNotOptimize(cub(q, n));
}
BENCHMARK(BM_CubFormula);
BENCHMARK_MAIN();
