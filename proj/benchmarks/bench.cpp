#include <benchmark/benchmark.h>

#include "fsz/bounds.hpp"
#include "fsz/minda.hpp"
#include "fsz/oracle.hpp"
#include "fsz/series.hpp"

namespace {

using fsz::cplx;

fsz::TruncatedSeries random_cubic() {
  fsz::TruncatedSeries f(3);
  f.set_coeff(1, cplx(1.0, 0.0));
  f.set_coeff(2, cplx(0.7, -0.3));
  f.set_coeff(3, cplx(-0.2, 0.5));
  return f;
}

void BM_series_mul(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  fsz::TruncatedSeries a(n), b(n);
  for (int k = 0; k <= n; ++k) {
    a.set_coeff(k, cplx(1.0 / (k + 1), 0.25));
    b.set_coeff(k, cplx(0.5, -1.0 / (k + 2)));
  }
  for (auto _ : state) benchmark::DoNotOptimize(fsz::series_mul(a, b));
}
BENCHMARK(BM_series_mul)->Arg(3)->Arg(16);

void BM_series_reversion(benchmark::State& state) {
  const fsz::TruncatedSeries f = random_cubic().with_order(
      static_cast<int>(state.range(0)));
  fsz::TruncatedSeries g = f;
  g.set_coeff(0, cplx(0.0, 0.0));
  g.set_coeff(1, cplx(1.0, 0.0));
  for (auto _ : state) benchmark::DoNotOptimize(fsz::series_reversion(g));
}
BENCHMARK(BM_series_reversion)->Arg(3)->Arg(16);

void BM_operator_expand(benchmark::State& state) {
  const fsz::TruncatedSeries f = random_cubic();
  const fsz::ClassParams params{0.5, cplx(1.0, 0.5)};
  for (auto _ : state)
    benchmark::DoNotOptimize(fsz::operator_expand(f, params));
}
BENCHMARK(BM_operator_expand);

void BM_elliptic_k(benchmark::State& state) {
  double m = 0.0;
  for (auto _ : state) {
    m += 1e-9;
    benchmark::DoNotOptimize(fsz::elliptic_k(0.5 + m));
  }
}
BENCHMARK(BM_elliptic_k);

void BM_fs_bound_t1(benchmark::State& state) {
  const fsz::ClassParams params{0.25, cplx(1.0, 1.0)};
  for (auto _ : state)
    benchmark::DoNotOptimize(
        fsz::fs_bound_t1(params, 2.0, 2.0, cplx(0.7, -0.4)));
}
BENCHMARK(BM_fs_bound_t1);

void BM_fs_bound_t3(benchmark::State& state) {
  const fsz::ClassParams params{0.25, cplx(1.0, 1.0)};
  for (auto _ : state)
    benchmark::DoNotOptimize(fsz::fs_bound_t3(params, 2.0, 1.0, 0.7));
}
BENCHMARK(BM_fs_bound_t3);

void BM_oracle_grid(benchmark::State& state) {
  const fsz::ClassParams params{0.0, cplx(1.0, 0.0)};
  fsz::OracleConfig config;
  config.radial_steps = static_cast<int>(state.range(0));
  config.angular_steps = static_cast<int>(state.range(0));
  config.refine_iterations = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(
        fsz::oracle_max(fsz::OracleFunctional::fekete_szego(cplx(0.5, 0.0)),
                        params, 2.0, 2.0, config));
  state.SetItemsProcessed(state.iterations() * config.radial_steps *
                          config.radial_steps * config.angular_steps);
}
BENCHMARK(BM_oracle_grid)->Arg(16)->Arg(60);

}  // namespace

BENCHMARK_MAIN();
