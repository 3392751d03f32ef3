#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "dsturm/chebsys.hpp"
#include "dsturm/families.hpp"
#include "dsturm/gapfourier.hpp"
#include "dsturm/minimax.hpp"
#include "dsturm/oscillation.hpp"
#include "dsturm/spectrum.hpp"
#include "dsturm/yudin.hpp"

namespace {

using namespace dsturm;

void BM_Spectrum(benchmark::State& state) {
  const auto sys = legendre().system(static_cast<int>(state.range(0)), 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(compute_spectrum(sys));
}
BENCHMARK(BM_Spectrum)->RangeMultiplier(2)->Range(8, 256);

void BM_EigenfunctionCounts(benchmark::State& state) {
  const auto spec = compute_spectrum(chebyshev_u().system(static_cast<int>(state.range(0)), 0.0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_eigenfunction_counts(spec));
}
BENCHMARK(BM_EigenfunctionCounts)->Arg(30)->Arg(120);

void BM_Certify(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  const auto spec = compute_spectrum(legendre().system(q, 0.0));
  const auto s = psi_system(spec, (q + 1) / 2);
  for (auto _ : state) benchmark::DoNotOptimize(certify(s));
  state.counters["subsets"] = static_cast<double>(binomial(q + 1, (q + 1) / 2));
}
BENCHMARK(BM_Certify)->DenseRange(5, 13, 4);

void BM_Exchange(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  const auto spec = compute_spectrum(chebyshev_t().system(q, 0.0));
  const auto s = psi_system(spec, 5);
  std::mt19937_64 rng(1);
  std::normal_distribution<double> g;
  DiscreteFunction f;
  for (int nu = 0; nu <= q; ++nu) f.values.push_back(g(rng));
  ExchangeOptions opt;
  opt.assume_tz = true;
  for (auto _ : state) benchmark::DoNotOptimize(best_approx(f, s, opt));
}
BENCHMARK(BM_Exchange)->Arg(12)->Arg(50)->Arg(200);

void BM_ExchangeOracle(benchmark::State& state) {
  const auto spec = compute_spectrum(chebyshev_t().system(12, 0.0));
  const auto s = psi_system(spec, 4);
  DiscreteFunction f;
  for (int nu = 0; nu <= 12; ++nu) f.values.push_back((nu * 37 % 11) - 5.0);
  for (auto _ : state) benchmark::DoNotOptimize(best_approx_oracle(f, s));
}
BENCHMARK(BM_ExchangeOracle);

void BM_GapExpand(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  const auto sys = chebyshev_u().system(q, 0.5);
  const auto spec = compute_spectrum(sys);
  for (auto _ : state) benchmark::DoNotOptimize(gap_expand(sys, spec, 2));
}
BENCHMARK(BM_GapExpand)->Arg(5)->Arg(10)->Arg(20);

void BM_Krein(benchmark::State& state) {
  const auto f = normalized(legendre());
  const int L = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(krein_check(f, L));
}
BENCHMARK(BM_Krein)->Arg(8)->Arg(16);

void BM_Yudin(benchmark::State& state) {
  const auto f = normalized(chebyshev_u());
  for (auto _ : state) benchmark::DoNotOptimize(yudin_extremal(f, 6, 2, 1));
}
BENCHMARK(BM_Yudin);

}  // namespace

BENCHMARK_MAIN();
