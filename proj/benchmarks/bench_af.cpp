#include <benchmark/benchmark.h>

#include "drcskit/af.hpp"
#include "drcskit/bounds.hpp"
#include "drcskit/drcs.hpp"
#include "drcskit/registry.hpp"

using namespace drcskit;

namespace {

DrcsSet example1_set() {
  FieldCtx ctx(registry::example1_p(), registry::example1_n(),
               registry::example1_poly());
  return construct_drcs(extend_quasi_florentine(build_quasi_florentine(ctx), 9),
                        registry::example1_bh());
}

DrcsSet gf25_set() {
  FieldCtx ctx(5, 2, smallest_primitive_poly(5, 2));
  return construct_drcs(build_quasi_florentine(ctx), bh_dft(25));
}

void GridTransform(benchmark::State& state) {
  const DrcsSet s = example1_set();
  for (auto _ : state) {
    AFGrid g = af_grid(s, 0, 1, Zone{9, 9});
    benchmark::DoNotOptimize(g.vals.data());
  }
}
BENCHMARK(GridTransform);

void GridNaive(benchmark::State& state) {
  const DrcsSet s = example1_set();
  for (auto _ : state) {
    AFGrid g = af_grid_naive(s, 0, 1, Zone{9, 9});
    benchmark::DoNotOptimize(g.vals.data());
  }
}
BENCHMARK(GridNaive);

void ZoneMetricsGf25(benchmark::State& state) {
  const DrcsSet s = gf25_set();
  for (auto _ : state) {
    ZoneMetrics zm = zone_metrics(s, Zone{24, 24});
    benchmark::DoNotOptimize(zm.theta_max);
  }
}
BENCHMARK(ZoneMetricsGf25)->Unit(benchmark::kMillisecond);

void GridNaiveGf25Pair(benchmark::State& state) {
  const DrcsSet s = gf25_set();
  for (auto _ : state) {
    AFGrid g = af_grid_naive(s, 0, 1, Zone{24, 24});
    benchmark::DoNotOptimize(g.vals.data());
  }
}
BENCHMARK(GridNaiveGf25Pair)->Unit(benchmark::kMillisecond);

void ConstructGf25(benchmark::State& state) {
  FieldCtx ctx(5, 2, smallest_primitive_poly(5, 2));
  const Rectangle rect = build_quasi_florentine(ctx);
  const ButsonMatrix b = bh_dft(25);
  for (auto _ : state) {
    DrcsSet s = construct_drcs(rect, b);
    benchmark::DoNotOptimize(s.exps.data());
  }
}
BENCHMARK(ConstructGf25);

void BoundTableP2(benchmark::State& state) {
  for (auto _ : state) {
    double acc = 0.0;
    for (long p : registry::primes_in_range(3, 119)) {
      const auto row = registry::p2_family_row(p);
      acc += rho(static_cast<double>(row.theta),
                 bound_shen(row.K, row.M, row.N, row.Zx, row.Zy));
      acc += rho(static_cast<double>(row.theta),
                 bound_lev(row.K, row.M, row.N, row.Zy));
    }
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BoundTableP2);

}  // namespace

BENCHMARK_MAIN();
