#include <algorithm>
#include <sstream>

#include "vesselplan/metaheuristic.hpp"

namespace vesselplan::meta {

namespace {

struct Individual {
  ProcurementPlan plan;
  Money cost;
};

struct Mode {
  bool anneal;
  bool greedy_seed;
};

ProcurementPlan random_plan(const DemandSeries& demand, Rng& rng) {
  const int peak = std::max(1, demand.max());
  ProcurementPlan plan(demand.horizon());
  for (int w = 0; w < demand.horizon(); ++w) {
    plan.set_buys(UnitKind::Vessel, w, static_cast<int>(rng.uniform_int(0, peak)));
    plan.set_buys(UnitKind::Operator, w, static_cast<int>(rng.uniform_int(0, 4 * peak)));
  }
  return plan;
}

double mean_cost(const std::vector<Individual>& pop) {
  double sum = 0.0;
  for (const auto& ind : pop) sum += ind.cost.to_double();
  return pop.empty() ? 0.0 : sum / static_cast<double>(pop.size());
}

SolveResult run(const DemandSeries& demand, const FleetParams& params, const CostParams& costs,
                const SolverConfig& config, const AnnealSchedule& schedule, Mode mode) {
  config.validate();
  schedule.validate();

  Rng rng(config.rng_seed);
  SolveResult res;
  const auto pop_size = static_cast<std::size_t>(config.population_size);
  const double t0 = schedule.initial_temp;

  Individual best;
  bool have_best = false;
  auto evaluate = [&](const ProcurementPlan& candidate) {
    Individual ind;
    ind.plan = model::repair(candidate, demand, params, costs);
    ind.cost =
        std::get<model::Schedule>(model::simulate(ind.plan, demand, params, costs)).total_cost;
    ++res.evaluations;
    if (!have_best || ind.cost < best.cost) {
      best = ind;
      have_best = true;
      res.iterations_to_best = res.evaluations;
    }
    return ind;
  };
  auto budget_left = [&] { return res.evaluations < config.max_iterations; };

  std::vector<Individual> population;
  population.reserve(pop_size);
  if (mode.greedy_seed) {
    const ProcurementPlan seeded = greedy::seed_plan(demand, params, costs);
    auto [reduced, greedy_trace] = greedy::reduce(seeded, demand, params, costs);
    res.greedy = std::move(greedy_trace);
    population.push_back(evaluate(reduced));
    while (population.size() < pop_size && budget_left()) {
      population.push_back(evaluate(mutate(reduced, t0, config, rng)));
    }
  } else {
    while (population.size() < pop_size && budget_left()) {
      population.push_back(evaluate(random_plan(demand, rng)));
    }
  }

  double temperature = t0;
  int generation = 0;
  res.trace.records.push_back(
      TraceRecord{0, res.evaluations, temperature, best.cost, mean_cost(population), 0});

  std::vector<double> fitnesses;
  while (budget_left() && (!mode.anneal || temperature >= schedule.termination_temp)) {
    ++generation;
    fitnesses.clear();
    for (const auto& ind : population) fitnesses.push_back(ind.cost.to_double());

    const Money best_before = best.cost;
    std::vector<Individual> next;
    next.reserve(pop_size);
    next.push_back(best);  // elitism

    const double mutation_temp = mode.anneal ? temperature : t0;
    while (next.size() < pop_size && budget_left()) {
      const auto [i, j] = roulette_select(fitnesses, rng);
      auto [a, b] = crossover(population[i].plan, population[j].plan, rng, config.crossover_rate);
      a = mutate(a, mutation_temp, config, rng);
      b = mutate(b, mutation_temp, config, rng);
      next.push_back(evaluate(a));
      if (next.size() < pop_size && budget_left()) next.push_back(evaluate(b));
    }

    const bool improved = best.cost < best_before;
    if (improved) ++res.improvements;
    if (mode.anneal) {
      if (improved && reheat_applies(temperature)) ++res.reheats;
      temperature = anneal_step(temperature, improved, schedule);
    }
    population = std::move(next);
    res.trace.records.push_back(TraceRecord{generation, res.evaluations, temperature, best.cost,
                                            mean_cost(population), res.reheats});
  }

  res.best_plan = best.plan;
  res.schedule = std::get<model::Schedule>(model::simulate(best.plan, demand, params, costs));
  return res;
}

}  // namespace

SolveResult solve(const DemandSeries& demand, const FleetParams& params, const CostParams& costs,
                  const SolverConfig& config, const AnnealSchedule& schedule,
                  bool use_greedy_seed) {
  return run(demand, params, costs, config, schedule, Mode{true, use_greedy_seed});
}

SolveResult solve_plain_ga(const DemandSeries& demand, const FleetParams& params,
                           const CostParams& costs, const SolverConfig& config,
                           const AnnealSchedule& schedule) {
  return run(demand, params, costs, config, schedule, Mode{false, false});
}

std::string format_trace_csv(const ConvergenceTrace& trace) {
  std::ostringstream out;
  out.precision(17);
  out << "iteration,temperature,best_cost,mean_cost,reheats\n";
  for (const auto& r : trace.records) {
    out << r.evaluations << ',' << r.temperature << ',' << r.best_cost.to_string() << ','
        << r.mean_cost << ',' << r.reheats << '\n';
  }
  return out.str();
}

}  // namespace vesselplan::meta
