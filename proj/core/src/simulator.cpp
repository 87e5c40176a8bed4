#include <cmath>

#include "vesselplan/errors.hpp"
#include "vesselplan/model.hpp"

namespace vesselplan::model {

std::string_view kind_name(Infeasibility::Kind kind) {
  switch (kind) {
    case Infeasibility::Kind::InsufficientVessels: return "INSUFFICIENT_VESSELS";
    case Infeasibility::Kind::InsufficientOperators: return "INSUFFICIENT_OPERATORS";
    case Infeasibility::Kind::InsufficientInstructors: return "INSUFFICIENT_INSTRUCTORS";
  }
  return "UNKNOWN";
}

std::string Infeasibility::message() const {
  return std::string(kind_name(kind)) + " in week " + std::to_string(week) + ": short by " +
         std::to_string(shortfall);
}

bool discard_operator(int maint_weeks, const CostParams& costs) {
  return costs.operator_maint_price() * maint_weeks >
         costs.operator_price() + costs.training_price() * 2;
}

bool discard_vessel(int maint_weeks, const CostParams& costs) {
  return costs.vessel_maint_price() * maint_weeks > costs.vessel_price();
}

Money week_cost(const WeekRecord& r, const CostParams& costs) {
  return costs.vessel_price() * r.vessel_buys + costs.operator_price() * r.operator_buys +
         costs.training_price() * (r.instructors + r.trainees) +
         costs.vessel_maint_price() * r.vessels_maint +
         costs.operator_maint_price() * r.operators_maint;
}

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace

StepResult step_week(const FleetState& state, WeekBuys buys, int demand, const FleetParams& params,
                     const CostParams& costs) {
  const double k = params.attrition_rate();
  const int week = state.week + 1;

  FleetState next;
  next.week = week;
  WeekRecord rec;
  rec.week = week;
  rec.vessel_buys = buys.vessels;
  rec.operator_buys = buys.operators;

  // (a) attrition on last week's working units
  UnitPool worked_v = state.vessels.in_use;
  UnitPool worked_o = state.operators.in_use;
  rec.vessels_destroyed = round_half_up(k * worked_v.size());
  rec.operators_destroyed = round_half_up(k * worked_o.size());
  worked_v.take(rec.vessels_destroyed);
  worked_o.take(rec.operators_destroyed);

  // (b) survivors head into one week of maintenance
  worked_v.age_one_week();
  worked_o.age_one_week();

  // (c) releases
  auto& v = next.vessels;
  auto& o = next.operators;
  v.available = state.vessels.available;
  v.available.add(state.vessels.maintenance);
  v.available.add(state.vessels.commissioning);
  o.available = state.operators.available;
  o.available.add(state.operators.maintenance);
  o.available.add(state.operators.training);
  o.available.add(state.operators.instructing);

  // (d) discards among units entering maintenance
  for (const auto& c : worked_v.cohorts()) {
    if (discard_vessel(c.maint_weeks, costs)) {
      rec.vessel_discards += c.count;
    } else {
      v.maintenance.add(c.maint_weeks, c.count);
    }
  }
  for (const auto& c : worked_o.cohorts()) {
    if (discard_operator(c.maint_weeks, costs)) {
      rec.operator_discards += c.count;
    } else {
      o.maintenance.add(c.maint_weeks, c.count);
    }
  }

  // (e) purchases
  v.commissioning.add(0, buys.vessels);
  o.training.add(0, buys.operators);
  const int instructors = ceil_div(buys.operators, params.instruct_capacity());

  // (f) deployment, then instructor reservation
  const int crew = 4 * demand;
  if (v.available.size() < demand) {
    return Infeasibility{Infeasibility::Kind::InsufficientVessels, week,
                         demand - v.available.size()};
  }
  if (o.available.size() < crew) {
    return Infeasibility{Infeasibility::Kind::InsufficientOperators, week,
                         crew - o.available.size()};
  }
  if (o.available.size() - crew < instructors) {
    return Infeasibility{Infeasibility::Kind::InsufficientInstructors, week,
                         instructors - (o.available.size() - crew)};
  }
  v.in_use = v.available.take(demand);
  o.in_use = o.available.take(crew);
  o.instructing = o.available.take(instructors);

  // (g) costing
  rec.vessels_maint = v.maintenance.size();
  rec.operators_maint = o.maintenance.size();
  rec.instructors = instructors;
  rec.trainees = buys.operators;
  rec.robots_deployed = demand;
  rec.week_cost = week_cost(rec, costs);
  rec.vessels_owned = v.total();
  rec.operators_owned = o.total();

  return WeekOutcome{std::move(next), rec};
}

SimulationResult simulate(const ProcurementPlan& plan, const DemandSeries& demand,
                          const FleetParams& params, const CostParams& costs) {
  if (plan.horizon() != demand.horizon())
    throw ValidationError("plan", "horizon " + std::to_string(plan.horizon()) +
                                      " differs from demand horizon " +
                                      std::to_string(demand.horizon()));
  if (params.horizon() != demand.horizon())
    throw ValidationError("horizon", "config horizon " + std::to_string(params.horizon()) +
                                         " differs from demand horizon " +
                                         std::to_string(demand.horizon()));
  Schedule schedule;
  schedule.weeks.reserve(static_cast<std::size_t>(demand.horizon()));
  FleetState state = FleetState::initial(params);
  for (int w = 0; w < demand.horizon(); ++w) {
    const auto i = static_cast<std::size_t>(w);
    StepResult step = step_week(state, WeekBuys{plan.vessel_buys()[i], plan.operator_buys()[i]},
                                demand[i], params, costs);
    if (auto* bad = std::get_if<Infeasibility>(&step)) return *bad;
    auto& outcome = std::get<WeekOutcome>(step);
    schedule.total_cost += outcome.record.week_cost;
    schedule.weeks.push_back(outcome.record);
    state = std::move(outcome.next_state);
  }
  return schedule;
}

Money total_cost(const Schedule& schedule, const CostParams& costs) {
  std::int64_t vessels = 0, operators = 0, training = 0, vessel_maint = 0, operator_maint = 0;
  for (const auto& r : schedule.weeks) {
    vessels += r.vessel_buys;
    operators += r.operator_buys;
    training += r.instructors + r.trainees;
    vessel_maint += r.vessels_maint;
    operator_maint += r.operators_maint;
  }
  return costs.vessel_price() * vessels + costs.operator_price() * operators +
         costs.training_price() * training + costs.vessel_maint_price() * vessel_maint +
         costs.operator_maint_price() * operator_maint;
}

}  // namespace vesselplan::model
