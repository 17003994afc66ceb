#include <benchmark/benchmark.h>

#include "chevalley/fsind.hpp"
#include "chevalley/laurent.hpp"
#include "chevalley/weyl.hpp"

using namespace chevalley;

namespace {

RootDatum sc(const char* type) {
  auto t = CartanType::parse(type);
  return RootDatum::build(t, LatticeSpec::named("sc", t));
}

// Half of the Weyl density: the product over positive roots of (1 - t^alpha).
LaurentPoly positive_half(const RootDatum& d) {
  LaurentPoly p = laurent_monomial(IntVec(static_cast<std::size_t>(d.rank()), 0));
  for (const auto& r : d.positive_roots()) {
    LaurentPoly f = laurent_monomial(IntVec(static_cast<std::size_t>(d.rank()), 0));
    f.emplace(d.root_to_weight(r), -1);
    p = laurent_multiply_serial(p, f);
  }
  return p;
}

void BM_LaurentSquare(benchmark::State& state, const char* type, bool parallel) {
  const LaurentPoly p = positive_half(sc(type));
  for (auto _ : state)
    benchmark::DoNotOptimize(parallel ? laurent_multiply(p, p) : laurent_multiply_serial(p, p));
  state.counters["terms"] = static_cast<double>(p.size());
}

void BM_EnumerateWeyl(benchmark::State& state, const char* type, bool parallel) {
  const RootDatum d = sc(type);
  for (auto _ : state) benchmark::DoNotOptimize(parallel ? enumerate_weyl(d) : enumerate_weyl_serial(d));
}

void BM_FsOracle(benchmark::State& state, const char* type) {
  const RootDatum d = sc(type);
  const LaurentPoly density = weyl_density(d);
  IntVec lambda(static_cast<std::size_t>(d.rank()), 1);
  for (auto _ : state) benchmark::DoNotOptimize(fs_oracle(d, lambda, &density));
}

}  // namespace

BENCHMARK_CAPTURE(BM_LaurentSquare, serial_B3, "B3", false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_LaurentSquare, parallel_B3, "B3", true)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_LaurentSquare, serial_D4, "D4", false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_LaurentSquare, parallel_D4, "D4", true)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_EnumerateWeyl, serial_E6, "E6", false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_EnumerateWeyl, parallel_E6, "E6", true)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_FsOracle, B3, "B3")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
