#include "vesselplan/domain.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "vesselplan/errors.hpp"
#include "vesselplan/rng.hpp"

namespace vesselplan {

// The 1e-9 nudge keeps products like 0.3 * 5 on the intended side of a tie.
int round_half_up(double x) { return static_cast<int>(std::floor(x + 0.5 + 1e-9)); }

namespace {

void require_positive(const char* field, Money m) {
  if (m <= Money{}) throw ValidationError(field, "must be strictly positive, got " + m.to_string());
}

}  // namespace

CostParams::CostParams(Money vessel_price, Money operator_price, Money training_price,
                       Money operator_maint_price, Money vessel_maint_price)
    : vessel_price_(vessel_price),
      operator_price_(operator_price),
      training_price_(training_price),
      operator_maint_price_(operator_maint_price),
      vessel_maint_price_(vessel_maint_price) {
  require_positive("vessel_price", vessel_price_);
  require_positive("operator_price", operator_price_);
  require_positive("training_price", training_price_);
  require_positive("operator_maint_price", operator_maint_price_);
  require_positive("vessel_maint_price", vessel_maint_price_);
}

std::string_view scenario_name(Scenario s) {
  switch (s) {
    case Scenario::Base: return "base";
    case Scenario::K20: return "k20";
    case Scenario::K10G20: return "k10g20";
  }
  return "base";
}

Scenario parse_scenario(std::string_view name) {
  if (name == "base") return Scenario::Base;
  if (name == "k20") return Scenario::K20;
  if (name == "k10g20") return Scenario::K10G20;
  throw ValidationError("scenario", "expected base, k20 or k10g20, got '" + std::string(name) + "'");
}

FleetParams::FleetParams(int instruct_capacity, double attrition_rate, int initial_vessels,
                         int initial_operators, int horizon)
    : instruct_capacity_(instruct_capacity),
      attrition_rate_(attrition_rate),
      initial_vessels_(initial_vessels),
      initial_operators_(initial_operators),
      horizon_(horizon) {
  if (instruct_capacity_ < 1) throw ValidationError("instruct_capacity", "must be >= 1");
  if (!(attrition_rate_ >= 0.0 && attrition_rate_ < 1.0))
    throw ValidationError("attrition_rate", "must lie in [0, 1)");
  if (initial_vessels_ < 0) throw ValidationError("initial_vessels", "must be >= 0");
  if (initial_operators_ < 0) throw ValidationError("initial_operators", "must be >= 0");
  if (horizon_ < 1) throw ValidationError("horizon", "must be >= 1");
}

FleetParams FleetParams::with_scenario(Scenario s) const {
  switch (s) {
    case Scenario::Base:
      return FleetParams(instruct_capacity_, 0.0, initial_vessels_, initial_operators_, horizon_);
    case Scenario::K20:
      return FleetParams(instruct_capacity_, 0.20, initial_vessels_, initial_operators_, horizon_);
    case Scenario::K10G20:
      return FleetParams(20, 0.10, initial_vessels_, initial_operators_, horizon_);
  }
  return *this;
}

FleetParams FleetParams::with_horizon(int horizon) const {
  return FleetParams(instruct_capacity_, attrition_rate_, initial_vessels_, initial_operators_,
                     horizon);
}

DemandSeries::DemandSeries(std::vector<int> values) : values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] < 0)
      throw ValidationError("demand", "week " + std::to_string(i + 1) + " is negative");
  }
}

int DemandSeries::max() const {
  return values_.empty() ? 0 : *std::max_element(values_.begin(), values_.end());
}

std::int64_t DemandSeries::sum() const {
  return std::accumulate(values_.begin(), values_.end(), std::int64_t{0});
}

ProcurementPlan::ProcurementPlan(int horizon)
    : vessel_buys_(static_cast<std::size_t>(std::max(horizon, 0)), 0),
      operator_buys_(static_cast<std::size_t>(std::max(horizon, 0)), 0) {
  if (horizon < 0) throw ValidationError("horizon", "must be >= 0");
}

ProcurementPlan::ProcurementPlan(std::vector<int> vessel_buys, std::vector<int> operator_buys)
    : vessel_buys_(std::move(vessel_buys)), operator_buys_(std::move(operator_buys)) {
  if (vessel_buys_.size() != operator_buys_.size())
    throw ValidationError("plan", "vessel and operator sequences differ in length");
  auto negative = [](int v) { return v < 0; };
  if (std::any_of(vessel_buys_.begin(), vessel_buys_.end(), negative))
    throw ValidationError("vessel_buys", "entries must be >= 0");
  if (std::any_of(operator_buys_.begin(), operator_buys_.end(), negative))
    throw ValidationError("operator_buys", "entries must be >= 0");
}

int ProcurementPlan::buys(UnitKind kind, int week_index) const {
  const auto i = static_cast<std::size_t>(week_index);
  return kind == UnitKind::Vessel ? vessel_buys_.at(i) : operator_buys_.at(i);
}

void ProcurementPlan::set_buys(UnitKind kind, int week_index, int count) {
  if (count < 0) throw ValidationError("plan", "purchase counts must be >= 0");
  const auto i = static_cast<std::size_t>(week_index);
  (kind == UnitKind::Vessel ? vessel_buys_ : operator_buys_).at(i) = count;
}

void ProcurementPlan::add_buys(UnitKind kind, int week_index, int delta) {
  set_buys(kind, week_index, buys(kind, week_index) + delta);
}

int ProcurementPlan::gene(int g) const {
  const int h = horizon();
  return g < h ? vessel_buys_[static_cast<std::size_t>(g)]
               : operator_buys_[static_cast<std::size_t>(g - h)];
}

void ProcurementPlan::set_gene(int g, int value) {
  const int h = horizon();
  set_buys(g < h ? UnitKind::Vessel : UnitKind::Operator, g < h ? g : g - h, value);
}

std::int64_t ProcurementPlan::total_units() const {
  return std::accumulate(vessel_buys_.begin(), vessel_buys_.end(), std::int64_t{0}) +
         std::accumulate(operator_buys_.begin(), operator_buys_.end(), std::int64_t{0});
}

DemandSeries gen_demand(int horizon, std::uint64_t seed, double level, double volatility) {
  if (horizon < 1) throw ValidationError("horizon", "must be >= 1");
  if (!(level >= 0.0) || !std::isfinite(level)) throw ValidationError("level", "must be >= 0");
  if (!(volatility >= 0.0) || !std::isfinite(volatility))
    throw ValidationError("volatility", "must be >= 0");

  constexpr double kReversion = 0.25;
  constexpr double kSqrt3 = 1.7320508075688772;  // unit-variance uniform step
  const double step_scale = level * volatility * kSqrt3;
  const double upper = 2.0 * level;

  Rng rng(seed);
  std::vector<int> values;
  values.reserve(static_cast<std::size_t>(horizon));
  double x = level;
  for (int week = 0; week < horizon; ++week) {
    const double shock = step_scale * (2.0 * rng.uniform01() - 1.0);
    x = x + kReversion * (level - x) + shock;
    x = std::clamp(x, 0.0, upper);
    values.push_back(std::max(0, round_half_up(x)));
  }
  return DemandSeries(std::move(values));
}

}  // namespace vesselplan
