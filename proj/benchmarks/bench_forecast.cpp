#include <benchmark/benchmark.h>

#include <cmath>

#include "vesselplan/forecast.hpp"
#include "vesselplan/rng.hpp"

using namespace vesselplan;
using namespace vesselplan::forecast;

namespace {

// Random walk with an AR(1) increment.
std::vector<double> make_series(int n) {
  Rng rng(5);
  std::vector<double> y(static_cast<std::size_t>(n));
  double w = 0.0, level = 100.0;
  for (double& v : y) {
    w = 0.5 * w + (rng.uniform01() - 0.5);
    level += w;
    v = level;
  }
  return y;
}

void BM_RlsFit(benchmark::State& state) {
  const auto y = make_series(static_cast<int>(state.range(0)));
  const ArimaOrder order(3, 1, 4);
  for (auto _ : state) benchmark::DoNotOptimize(rls_fit(y, order, 0.98));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RlsFit)->Arg(200)->Arg(2000);

void BM_AstromPredict(benchmark::State& state) {
  const auto y = make_series(500);
  const ArimaModel model = rls_fit(y, ArimaOrder(3, 1, 4), 0.98).model;
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(astrom_predict(model, y, k));
}
BENCHMARK(BM_AstromPredict)->Arg(1)->Arg(12);

void BM_ConditionalExpectation(benchmark::State& state) {
  const auto y = make_series(500);
  const ArimaModel model = rls_fit(y, ArimaOrder(3, 1, 4), 0.98).model;
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(conditional_expectation_predict(model, y, k));
}
BENCHMARK(BM_ConditionalExpectation)->Arg(1)->Arg(12);

}  // namespace
