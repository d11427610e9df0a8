#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "lpcrit/counterexamples.hpp"
#include "lpcrit/criterion.hpp"
#include "lpcrit/lattice.hpp"
#include "lpcrit/monte_carlo.hpp"
#include "lpcrit/series.hpp"
#include "lpcrit/sin_integral.hpp"
#include "lpcrit/trig_poly.hpp"

namespace {

constexpr double pi = std::numbers::pi;

void BM_sin_power_integral(benchmark::State& state) {
  const double p = static_cast<double>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(lpcrit::sin_power_integral(0.0, 50.0, p));
}
BENCHMARK(BM_sin_power_integral)->Arg(1)->Arg(2)->Arg(5)->Arg(12);

void BM_sin_power_cells(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        lpcrit::sin_power_integral_cells(0.0, pi, 2.5, state.range(0)));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_sin_power_cells)->Arg(256)->Arg(2048)->Arg(16384)->Complexity();

void BM_certify_bound(benchmark::State& state) {
  const lpcrit::NormPair norms = lpcrit::norms_for_box(0.0, 1.0, pi / 2.0, 1.0, 2.0);
  for (auto _ : state)
    benchmark::DoNotOptimize(lpcrit::certify_bound(pi / 2.0, 1.0, 2.0, norms));
}
BENCHMARK(BM_certify_bound);

void BM_box_norms(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(lpcrit::norms_for_box(0.0, 1.0, pi / 2.0, 1.0, 2.0));
}
BENCHMARK(BM_box_norms);

void BM_layer_count_sum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const long long kmax = n >= 8 ? 500 : 2000;  // counts must fit in 64 bits
  for (auto _ : state) {
    unsigned long long total = 0;
    for (long long k = 0; k <= kmax; ++k) total += lpcrit::count_layer_full(n, k);
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_layer_count_sum)->Arg(2)->Arg(4)->Arg(8);

void BM_blocked_kahan(benchmark::State& state) {
  const unsigned threads = static_cast<unsigned>(state.range(0));
  auto term = [](long long k) {
    const double v = 1.0 + static_cast<double>(k);
    return 1.0 / (v * v);
  };
  for (auto _ : state)
    benchmark::DoNotOptimize(lpcrit::blocked_kahan_sum(1 << 20, term, threads));
  state.SetItemsProcessed(state.iterations() * (1 << 20));
}
BENCHMARK(BM_blocked_kahan)->Arg(1)->Arg(2)->Arg(4);

void BM_interval_verify(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        lpcrit::verify_interval_family(2.0, 1.0, state.range(0)));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_interval_verify)->Arg(1000)->Arg(10000)->Arg(100000)->Complexity();

void BM_decompose_residual(benchmark::State& state) {
  const std::vector<long long> b{2, -3, 1, 2};
  for (auto _ : state) {
    const auto q = lpcrit::decompose(b);
    benchmark::DoNotOptimize(lpcrit::identity_residual(b, q, 200));
  }
}
BENCHMARK(BM_decompose_residual);

void BM_monte_carlo(benchmark::State& state) {
  const lpcrit::Box box{{0.0, 0.0, 0.0}, {1.0, 1.0, 1.0}};
  auto f = [](const std::vector<double>& x) {
    return x[0] + x[1] * x[2];
  };
  for (auto _ : state)
    benchmark::DoNotOptimize(lpcrit::monte_carlo_mass(f, box, state.range(0), 42));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_monte_carlo)->Arg(10000)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();
