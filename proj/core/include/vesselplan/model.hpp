#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "vesselplan/domain.hpp"
#include "vesselplan/fleet_state.hpp"
#include "vesselplan/money.hpp"

namespace vesselplan::model {

/// One week of a schedule. Field names follow the CSV export columns.
struct WeekRecord {
  int week = 0;
  int vessel_buys = 0;
  int operator_buys = 0;
  int vessel_discards = 0;
  int operator_discards = 0;
  int vessels_destroyed = 0;
  int operators_destroyed = 0;
  int vessels_maint = 0;
  int operators_maint = 0;
  int instructors = 0;
  int trainees = 0;
  int robots_deployed = 0;
  Money week_cost;
  /// Ledger tallies at week end. Present on simulated schedules, absent on
  /// schedules read back from CSV.
  std::optional<int> vessels_owned;
  std::optional<int> operators_owned;

  friend bool operator==(const WeekRecord&, const WeekRecord&) = default;
};

struct Schedule {
  std::vector<WeekRecord> weeks;
  Money total_cost;

  friend bool operator==(const Schedule&, const Schedule&) = default;
};

struct WeekOutcome {
  FleetState next_state;
  WeekRecord record;
};

struct Infeasibility {
  enum class Kind { InsufficientVessels, InsufficientOperators, InsufficientInstructors };

  Kind kind;
  int week;       // 1-based
  int shortfall;  // units missing

  std::string message() const;
  friend bool operator==(const Infeasibility&, const Infeasibility&) = default;
};

std::string_view kind_name(Infeasibility::Kind kind);

using StepResult = std::variant<WeekOutcome, Infeasibility>;
using SimulationResult = std::variant<Schedule, Infeasibility>;

/// Discard an operator entering its `maint_weeks`-th maintenance week when
/// W_O * P_Om > P_O + 2 P_Ot.
bool discard_operator(int maint_weeks, const CostParams& costs);
/// Discard a vessel when W_C * P_Cm > P_C.
bool discard_vessel(int maint_weeks, const CostParams& costs);

struct WeekBuys {
  int vessels = 0;
  int operators = 0;
};

/// Advances the fleet by one week. Within-week order: attrition on last
/// week's in-use units, survivors into one week of maintenance, releases
/// (maintenance, commissioning, training, instructing -> available),
/// discards among units entering maintenance, purchases (vessels
/// commissioning, operators training under ceil(O_B/G) instructors),
/// deployment of R vessels and 4R skilled operators, costing.
///
/// Shortfalls are reported vessels first, then operators, then instructors.
StepResult step_week(const FleetState& state, WeekBuys buys, int demand, const FleetParams& params,
                     const CostParams& costs);

/// Purchase, training and maintenance cost of one week.
Money week_cost(const WeekRecord& record, const CostParams& costs);

SimulationResult simulate(const ProcurementPlan& plan, const DemandSeries& demand,
                          const FleetParams& params, const CostParams& costs);

/// Cost objective recomputed from summed counts.
Money total_cost(const Schedule& schedule, const CostParams& costs);

enum class Constraint {
  Eq7Usage,
  Eq9OperatorUsage,
  Eq11Instructors,
  Eq12Maintenance,
  Eq13Commissioning,
  Eq18AttritionSupply,
  NonNeg,
};

std::string_view constraint_name(Constraint c);

struct Violation {
  int week;
  Constraint constraint;
  std::string detail;
};

/// Re-checks a schedule against demand and fleet parameters from the week
/// records alone, without replaying the simulator.
std::vector<Violation> validate(const Schedule& schedule, const DemandSeries& demand,
                                const FleetParams& params, const CostParams& costs);

/// Makes a plan feasible by buying shortfalls at the latest week that still
/// honours the one-week lead times. Operator buys that exceed the week's
/// instructor capacity are first trimmed back to it. Feasible plans come back
/// unchanged. Throws InfeasibleError(Unrepairable) when a week-1 shortfall
/// cannot be covered.
ProcurementPlan repair(const ProcurementPlan& plan, const DemandSeries& demand,
                       const FleetParams& params, const CostParams& costs);

/// Header plus one row per week plus a `total` row.
std::string format_schedule_csv(const Schedule& schedule);
Schedule parse_schedule_csv(std::string_view text);

}  // namespace vesselplan::model
