#include <cmath>

#include "vesselplan/model.hpp"

namespace vesselplan::model {

std::string_view constraint_name(Constraint c) {
  switch (c) {
    case Constraint::Eq7Usage: return "EQ7_USAGE";
    case Constraint::Eq9OperatorUsage: return "EQ9_OPERATOR_USAGE";
    case Constraint::Eq11Instructors: return "EQ11_INSTRUCTORS";
    case Constraint::Eq12Maintenance: return "EQ12_MAINTENANCE";
    case Constraint::Eq13Commissioning: return "EQ13_COMMISSIONING";
    case Constraint::Eq18AttritionSupply: return "EQ18_ATTRITION_SUPPLY";
    case Constraint::NonNeg: return "NONNEG";
  }
  return "UNKNOWN";
}

// Works only from aggregate counts in the records; nothing here touches the
// unit ledger or step_week.
std::vector<Violation> validate(const Schedule& schedule, const DemandSeries& demand,
                                const FleetParams& params, const CostParams& /*costs*/) {
  std::vector<Violation> out;
  auto flag = [&out](int week, Constraint c, std::string detail) {
    out.push_back(Violation{week, c, std::move(detail)});
  };
  const double k = params.attrition_rate();
  const int g = params.instruct_capacity();
  const Constraint supply_id = k > 0.0 ? Constraint::Eq18AttritionSupply
                                       : Constraint::Eq13Commissioning;

  const int n = demand.horizon();
  const int recorded = static_cast<int>(schedule.weeks.size());
  for (int w = recorded; w < n; ++w) {
    flag(w + 1, Constraint::Eq7Usage,
         "no schedule record; demand " + std::to_string(demand[static_cast<std::size_t>(w)]));
  }
  for (int w = n; w < recorded; ++w) {
    flag(w + 1, Constraint::Eq7Usage, "schedule extends past the demand horizon");
  }

  long owned_v = params.initial_vessels();
  long owned_o = params.initial_operators();
  long worked_v = 0;  // units in use last week
  long worked_o = 0;

  for (int w = 0; w < std::min(n, recorded); ++w) {
    const auto& r = schedule.weeks[static_cast<std::size_t>(w)];
    const int week = w + 1;
    const int required = demand[static_cast<std::size_t>(w)];

    const int fields[] = {r.vessel_buys,     r.operator_buys,       r.vessel_discards,
                          r.operator_discards, r.vessels_destroyed, r.operators_destroyed,
                          r.vessels_maint,   r.operators_maint,     r.instructors,
                          r.trainees,        r.robots_deployed};
    bool negative = false;
    for (int f : fields) negative = negative || f < 0;
    if (negative || r.week_cost < Money{}) {
      flag(week, Constraint::NonNeg, "negative count or cost in record");
      continue;
    }
    if (r.week != week) {
      flag(week, Constraint::Eq7Usage, "record labelled week " + std::to_string(r.week));
    }

    // Usage equalities.
    if (r.robots_deployed != required) {
      flag(week, Constraint::Eq7Usage,
           "deployed " + std::to_string(r.robots_deployed) + " robots, demand " +
               std::to_string(required));
    }
    const long crew = 4L * r.robots_deployed;

    // Attrition: K of last week's working units, rounded half-up.
    const long expect_dv = static_cast<long>(std::floor(k * worked_v + 0.5 + 1e-9));
    const long expect_do = static_cast<long>(std::floor(k * worked_o + 0.5 + 1e-9));
    if (r.vessels_destroyed != expect_dv || r.operators_destroyed != expect_do) {
      flag(week, Constraint::Eq18AttritionSupply,
           "destroyed (" + std::to_string(r.vessels_destroyed) + "," +
               std::to_string(r.operators_destroyed) + "), expected (" +
               std::to_string(expect_dv) + "," + std::to_string(expect_do) + ")");
    }

    // Maintenance: every surviving, non-discarded unit from last week's work.
    const long min_maint_v = worked_v - r.vessel_discards - r.vessels_destroyed;
    const long min_maint_o = worked_o - r.operator_discards - r.operators_destroyed;
    if (r.vessels_maint < min_maint_v || r.operators_maint < min_maint_o) {
      flag(week, Constraint::Eq12Maintenance,
           "maintenance (" + std::to_string(r.vessels_maint) + "," +
               std::to_string(r.operators_maint) + ") below (" + std::to_string(min_maint_v) +
               "," + std::to_string(min_maint_o) + ")");
    }
    if (r.vessel_discards + r.vessels_destroyed > worked_v ||
        r.operator_discards + r.operators_destroyed > worked_o) {
      flag(week, Constraint::Eq12Maintenance,
           "more units discarded or destroyed than worked last week");
    }

    // Supply: purchases of this week are still commissioning or training.
    const long vessel_supply = owned_v - r.vessel_discards - r.vessels_destroyed - r.vessels_maint;
    if (vessel_supply < r.robots_deployed) {
      flag(week, supply_id,
           "deployed " + std::to_string(r.robots_deployed) + " vessels from a usable fleet of " +
               std::to_string(vessel_supply));
    }
    const long skilled_supply =
        owned_o - r.operator_discards - r.operators_destroyed - r.operators_maint;
    if (skilled_supply < crew) {
      flag(week, Constraint::Eq9OperatorUsage,
           "needs " + std::to_string(crew) + " skilled operators, " +
               std::to_string(skilled_supply) + " usable");
    } else if (skilled_supply - crew < r.instructors) {
      flag(week, Constraint::Eq11Instructors,
           std::to_string(r.instructors) + " instructors but only " +
               std::to_string(skilled_supply - crew) + " skilled operators spare");
    }

    // Training: N^t = O_B and N^g = ceil(O_B / G).
    const long expect_instructors = (static_cast<long>(r.operator_buys) + g - 1) / g;
    if (r.trainees != r.operator_buys || r.instructors != expect_instructors) {
      flag(week, Constraint::Eq11Instructors,
           "instructors " + std::to_string(r.instructors) + " / trainees " +
               std::to_string(r.trainees) + " for " + std::to_string(r.operator_buys) +
               " purchases, expected " + std::to_string(expect_instructors) + " instructors");
    }

    // Conservation of owned units.
    owned_v += r.vessel_buys - r.vessel_discards - r.vessels_destroyed;
    owned_o += r.operator_buys - r.operator_discards - r.operators_destroyed;
    if (owned_v < 0 || owned_o < 0) flag(week, Constraint::NonNeg, "owned fleet went negative");
    if ((r.vessels_owned && *r.vessels_owned != owned_v) ||
        (r.operators_owned && *r.operators_owned != owned_o)) {
      flag(week, Constraint::Eq18AttritionSupply,
           "owned totals break N_i = N_{i-1} + buys - discards - destroyed (expected " +
               std::to_string(owned_v) + "," + std::to_string(owned_o) + ")");
    }

    worked_v = r.robots_deployed;
    worked_o = crew;
  }
  return out;
}

}  // namespace vesselplan::model
