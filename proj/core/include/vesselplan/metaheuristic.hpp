#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vesselplan/domain.hpp"
#include "vesselplan/greedy.hpp"
#include "vesselplan/model.hpp"
#include "vesselplan/rng.hpp"

namespace vesselplan::meta {

/// Geometric cooling with reheat-on-improvement.
struct AnnealSchedule {
  double initial_temp = 100.0;
  double cooling = 0.98;
  double termination_temp = 0.01;

  /// Throws ValidationError unless initial_temp > 0, cooling in (0,1) and
  /// termination_temp > 0.
  void validate() const;
};

inline constexpr double kReheatEpsilon = 1e-9;

/// One temperature update. On improvement, and only while T > 1 + eps and the
/// warmed value stays positive, T <- T + 0.5 ln(T - 1). Then T <- T * s.
double anneal_step(double temperature, bool improved, const AnnealSchedule& schedule);

/// True when anneal_step(T, true, ...) would apply the warming term.
bool reheat_applies(double temperature);

struct SolverConfig {
  int population_size = 60;
  double crossover_rate = 0.8;
  double base_mutation_rate = 0.1;
  double mutation_magnitude_per_temp = 0.05;
  std::uint64_t rng_seed = 1;
  /// Cap on fitness evaluations.
  std::int64_t max_iterations = 200'000;
  bool elitism = true;

  void validate() const;
};

struct TraceRecord {
  int generation = 0;
  std::int64_t evaluations = 0;
  double temperature = 0.0;
  Money best_cost;
  double mean_cost = 0.0;
  int reheats = 0;
};

struct ConvergenceTrace {
  std::vector<TraceRecord> records;
};

struct SolveResult {
  ProcurementPlan best_plan;
  model::Schedule schedule;
  ConvergenceTrace trace;
  std::int64_t evaluations = 0;
  /// Evaluation count at which the returned best was first reached.
  std::int64_t iterations_to_best = 0;
  int improvements = 0;
  int reheats = 0;
  std::optional<greedy::GreedyTrace> greedy;
};

/// total_cost(simulate(repair(plan))).
Money fitness(const ProcurementPlan& plan, const DemandSeries& demand, const FleetParams& params,
              const CostParams& costs);

/// Roulette wheel on weights (max_cost - cost + 1). Returns two independent
/// draws as population indices.
std::pair<std::size_t, std::size_t> roulette_select(std::span<const double> costs, Rng& rng);

/// Per-week uniform exchange: each week's (C_B, O_B) pair is swapped between
/// the children with probability `rate`. Consumes one draw per week.
std::pair<ProcurementPlan, ProcurementPlan> crossover(const ProcurementPlan& a,
                                                      const ProcurementPlan& b, Rng& rng,
                                                      double rate);

/// max(1, round(magnitude_per_temp * T)).
int mutation_range(double temperature, double magnitude_per_temp);

/// Each gene mutates with probability base_mutation_rate by a uniform integer
/// step in [-m, m], clamped at zero.
ProcurementPlan mutate(const ProcurementPlan& plan, double temperature, const SolverConfig& config,
                       Rng& rng);

/// Hybrid solver: greedy seed (optional), roulette selection, crossover,
/// temperature-scaled mutation, repair, elitism, annealing. Stops when the
/// temperature drops below termination_temp or the evaluation cap is hit.
SolveResult solve(const DemandSeries& demand, const FleetParams& params, const CostParams& costs,
                  const SolverConfig& config, const AnnealSchedule& schedule,
                  bool use_greedy_seed);

/// Baseline GA: random initial population, constant mutation range (the
/// range at the initial temperature), no annealing, runs the full
/// max_iterations budget.
SolveResult solve_plain_ga(const DemandSeries& demand, const FleetParams& params,
                           const CostParams& costs, const SolverConfig& config,
                           const AnnealSchedule& schedule = {});

/// `iteration,temperature,best_cost,mean_cost,reheats`; iteration counts
/// fitness evaluations.
std::string format_trace_csv(const ConvergenceTrace& trace);

}  // namespace vesselplan::meta
