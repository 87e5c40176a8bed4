#pragma once

#include <optional>
#include <vector>

#include "vesselplan/domain.hpp"
#include "vesselplan/forecast.hpp"
#include "vesselplan/rng.hpp"

namespace vesselplan::testing {

struct OracleResult {
  Money cost;
  ProcurementPlan plan;
};

/// Exhaustive search with its own aggregate-count fleet model. Per week it
/// tries up to max_buy vessels and 4 * max_buy operators, i.e. max_buy
/// robots' worth of units. Only valid while no unit can reach its
/// discard threshold within the horizon; throws std::invalid_argument
/// otherwise. Empty when no bounded plan is feasible.
std::optional<OracleResult> brute_force_optimum(const DemandSeries& demand, const FleetParams& fleet,
                                                const CostParams& costs, int max_buy = 8);

struct Instance {
  DemandSeries demand;
  FleetParams fleet;
  CostParams costs;
};

/// Horizon 1..4, demand 0..2, week-1 feasible, discard-free.
Instance random_tiny_instance(Rng& rng);

/// Horizon 4..12 with a gen_demand series and an initial fleet with enough
/// spare operators to train replacements under attrition.
Instance random_small_instance(Rng& rng, Scenario scenario);

double gaussian(Rng& rng);

/// A(B)(1-B)^d y = C(B) e with A = 1 - sum a_i B^i, C = 1 + sum c_j B^j and
/// unit-variance Gaussian e. The first `burn` samples are discarded.
std::vector<double> simulate_arima(const std::vector<double>& ar, const std::vector<double>& ma,
                                   int d, int n, int burn, Rng& rng);

/// Coefficients of 1 + sum c_j B^j for a random polynomial of the given
/// degree whose roots all lie at modulus >= 1.25.
std::vector<double> random_stable_poly(Rng& rng, int degree);

/// Stationary, invertible ARIMA with p, q <= 3, d <= 2 and a random drift.
forecast::ArimaModel random_arima_model(Rng& rng);

}  // namespace vesselplan::testing
