#include <benchmark/benchmark.h>

#include "sbi/expint.hpp"
#include "sbi/oracle.hpp"
#include "sbi/sphfun.hpp"
#include "sbi/triple.hpp"

namespace {

sbi::IntegralSpec spec(double n, double m, int h, int k, int l) {
  sbi::IntegralSpec s;
  s.n = n;
  s.m = m;
  s.h = h;
  s.k = k;
  s.l = l;
  s.alpha = 1.3;
  s.beta = 0.7;
  s.mu = 2.1;
  return s;
}

void BM_SphBesselJ(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  double x = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sbi::sphfun::sph_bessel_j(l, x));
    x = x < 50.0 ? x * 1.01 : 0.5;
  }
}
BENCHMARK(BM_SphBesselJ)->Arg(0)->Arg(5)->Arg(20)->Arg(50);

void BM_Ei(benchmark::State& state) {
  double x = -45.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sbi::expint::ei(x));
    x += 0.37;
    if (x > 45.0) x = -45.0;
  }
}
BENCHMARK(BM_Ei);

void BM_E1Complex(benchmark::State& state) {
  const sbi::ComplexValue z{2.5, 1.5};
  for (auto _ : state) benchmark::DoNotOptimize(sbi::expint::e1_complex(z));
}
BENCHMARK(BM_E1Complex);

void BM_EvalIndefinite(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const auto s = spec(2, 0.5, order, order, order);
  for (auto _ : state) benchmark::DoNotOptimize(sbi::triple::eval_indefinite(s, 1.7));
  state.counters["terms"] = static_cast<double>(sbi::triple::reduce_orders(s).size());
}
BENCHMARK(BM_EvalIndefinite)->DenseRange(0, 4);

void BM_EvalDefinite(benchmark::State& state) {
  const auto s = spec(state.range(1) ? 1.0 : 0.5, 1.0, static_cast<int>(state.range(0)), 0, 1);
  for (auto _ : state) benchmark::DoNotOptimize(sbi::triple::eval_definite(s));
}
BENCHMARK(BM_EvalDefinite)->ArgsProduct({{0, 2}, {0, 1}});

void BM_SpecialCase000(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sbi::triple::special_case_000(3, 0.5, 1.3, 0.7, 2.1, 1.7));
}
BENCHMARK(BM_SpecialCase000);

void BM_OracleSemiInfinite(benchmark::State& state) {
  const auto s = spec(0, state.range(0) ? 0.0 : 1.0, 0, 0, 0);
  sbi::oracle::QuadConfig cfg;
  cfg.tail_policy = state.range(1) ? sbi::oracle::TailPolicy::period_summation
                                   : sbi::oracle::TailPolicy::exponential_bound;
  for (auto _ : state) benchmark::DoNotOptimize(sbi::oracle::quad_semi_infinite(s, cfg));
}
BENCHMARK(BM_OracleSemiInfinite)->ArgsProduct({{0, 1}, {0, 1}})->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
