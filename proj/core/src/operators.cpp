#include <algorithm>
#include <cmath>

#include "vesselplan/errors.hpp"
#include "vesselplan/metaheuristic.hpp"

namespace vesselplan::meta {

Money fitness(const ProcurementPlan& plan, const DemandSeries& demand, const FleetParams& params,
              const CostParams& costs) {
  const ProcurementPlan fixed = model::repair(plan, demand, params, costs);
  return std::get<model::Schedule>(model::simulate(fixed, demand, params, costs)).total_cost;
}

std::pair<std::size_t, std::size_t> roulette_select(std::span<const double> costs, Rng& rng) {
  if (costs.empty()) throw ValidationError("population", "must be nonempty");
  if (costs.size() == 1) return {0, 0};
  const double worst = *std::max_element(costs.begin(), costs.end());
  double total = 0.0;
  for (double c : costs) total += worst - c + 1.0;

  auto draw = [&]() -> std::size_t {
    double target = rng.uniform01() * total;
    for (std::size_t i = 0; i < costs.size(); ++i) {
      target -= worst - costs[i] + 1.0;
      if (target < 0.0) return i;
    }
    return costs.size() - 1;
  };
  const std::size_t first = draw();
  const std::size_t second = draw();
  return {first, second};
}

std::pair<ProcurementPlan, ProcurementPlan> crossover(const ProcurementPlan& a,
                                                      const ProcurementPlan& b, Rng& rng,
                                                      double rate) {
  if (a.horizon() != b.horizon()) throw ValidationError("plan", "parents differ in horizon");
  ProcurementPlan x = a;
  ProcurementPlan y = b;
  for (int w = 0; w < a.horizon(); ++w) {
    if (!rng.bernoulli(rate)) continue;
    for (UnitKind kind : {UnitKind::Vessel, UnitKind::Operator}) {
      const int xv = x.buys(kind, w);
      x.set_buys(kind, w, y.buys(kind, w));
      y.set_buys(kind, w, xv);
    }
  }
  return {std::move(x), std::move(y)};
}

int mutation_range(double temperature, double magnitude_per_temp) {
  return std::max(1, round_half_up(magnitude_per_temp * temperature));
}

ProcurementPlan mutate(const ProcurementPlan& plan, double temperature, const SolverConfig& config,
                       Rng& rng) {
  if (!(temperature > 0.0)) throw ValidationError("temperature", "must be > 0");
  const int m = mutation_range(temperature, config.mutation_magnitude_per_temp);
  ProcurementPlan out = plan;
  for (int g = 0; g < out.gene_count(); ++g) {
    if (!rng.bernoulli(config.base_mutation_rate)) continue;
    const auto step = static_cast<int>(rng.uniform_int(-m, m));
    out.set_gene(g, std::max(0, out.gene(g) + step));
  }
  return out;
}

}  // namespace vesselplan::meta
