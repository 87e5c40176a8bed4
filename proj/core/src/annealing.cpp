#include <cmath>

#include "vesselplan/errors.hpp"
#include "vesselplan/metaheuristic.hpp"

namespace vesselplan::meta {

void AnnealSchedule::validate() const {
  if (!(initial_temp > 0.0) || !std::isfinite(initial_temp))
    throw ValidationError("initial_temp", "must be > 0");
  if (!(cooling > 0.0 && cooling < 1.0)) throw ValidationError("cooling", "must lie in (0, 1)");
  if (!(termination_temp > 0.0)) throw ValidationError("termination_temp", "must be > 0");
}

bool reheat_applies(double temperature) {
  if (!(temperature > 1.0 + kReheatEpsilon)) return false;
  return temperature + 0.5 * std::log(temperature - 1.0) > 0.0;
}

double anneal_step(double temperature, bool improved, const AnnealSchedule& schedule) {
  if (improved && reheat_applies(temperature)) {
    temperature += 0.5 * std::log(temperature - 1.0);
  }
  return temperature * schedule.cooling;
}

void SolverConfig::validate() const {
  if (population_size < 2) throw ValidationError("population_size", "must be >= 2");
  auto unit = [](double p) { return p >= 0.0 && p <= 1.0; };
  if (!unit(crossover_rate)) throw ValidationError("crossover_rate", "must lie in [0, 1]");
  if (!unit(base_mutation_rate)) throw ValidationError("base_mutation_rate", "must lie in [0, 1]");
  if (!(mutation_magnitude_per_temp >= 0.0))
    throw ValidationError("mutation_magnitude_per_temp", "must be >= 0");
  if (max_iterations < 1) throw ValidationError("max_iterations", "must be >= 1");
  if (!elitism) throw ValidationError("elitism", "is always on");
}

}  // namespace vesselplan::meta
