#include <benchmark/benchmark.h>

#include "vesselplan/greedy.hpp"
#include "vesselplan/metaheuristic.hpp"
#include "vesselplan/model.hpp"

using namespace vesselplan;

namespace {

struct Instance {
  DemandSeries demand;
  FleetParams fleet;
  CostParams costs;
  ProcurementPlan plan;
};

Instance make_instance(int horizon) {
  DemandSeries demand = gen_demand(horizon, 42, 30.0, 0.2);
  FleetParams fleet(5, 0.0, 60, 250, horizon);
  CostParams costs(Money::from_units(200), Money::from_units(50), Money::from_units(10),
                   Money::from_units(5), Money::from_units(10));
  ProcurementPlan plan = greedy::seed_plan(demand, fleet, costs);
  return {std::move(demand), fleet, costs, std::move(plan)};
}

void BM_Simulate(benchmark::State& state) {
  const Instance inst = make_instance(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(model::simulate(inst.plan, inst.demand, inst.fleet, inst.costs));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Simulate)->Arg(26)->Arg(52)->Arg(104);

void BM_Fitness(benchmark::State& state) {
  const Instance inst = make_instance(static_cast<int>(state.range(0)));
  Rng rng(1);
  const meta::SolverConfig config;
  for (auto _ : state) {
    const ProcurementPlan candidate = meta::mutate(inst.plan, 50.0, config, rng);
    benchmark::DoNotOptimize(meta::fitness(candidate, inst.demand, inst.fleet, inst.costs));
  }
}
BENCHMARK(BM_Fitness)->Arg(26)->Arg(52);

void BM_GreedySeed(benchmark::State& state) {
  const Instance inst = make_instance(26);
  for (auto _ : state) {
    benchmark::DoNotOptimize(greedy::seed_plan(inst.demand, inst.fleet, inst.costs));
  }
}
BENCHMARK(BM_GreedySeed);

}  // namespace

BENCHMARK_MAIN();
