#include "vesselplan/greedy.hpp"

#include <optional>
#include <sstream>

#include "vesselplan/errors.hpp"
#include "vesselplan/model.hpp"

namespace vesselplan::greedy {

ProcurementPlan seed_plan(const DemandSeries& demand, const FleetParams& params,
                          const CostParams& costs) {
  try {
    return model::repair(ProcurementPlan(demand.horizon()), demand, params, costs);
  } catch (const InfeasibleError& e) {
    throw InfeasibleError(InfeasibleError::Code::Unseedable, e.week(),
                          "no purchase schedule covers demand (" + std::string(e.what()) + ")");
  }
}

namespace {

std::optional<Money> feasible_cost(const ProcurementPlan& plan, const DemandSeries& demand,
                                   const FleetParams& params, const CostParams& costs) {
  auto result = model::simulate(plan, demand, params, costs);
  if (const auto* s = std::get_if<model::Schedule>(&result)) return s->total_cost;
  return std::nullopt;
}

}  // namespace

std::pair<ProcurementPlan, GreedyTrace> reduce(const ProcurementPlan& plan,
                                               const DemandSeries& demand,
                                               const FleetParams& params,
                                               const CostParams& costs) {
  const auto start = feasible_cost(plan, demand, params, costs);
  if (!start) throw ValidationError("plan", "reduce requires a feasible plan");

  ProcurementPlan current = plan;
  GreedyTrace trace;
  trace.initial_cost = *start;
  Money current_cost = *start;

  while (true) {
    ++trace.passes;
    struct Candidate {
      int week_index;
      UnitKind kind;
      Money cost;
    };
    std::optional<Candidate> best;
    for (int w = current.horizon() - 1; w >= 0; --w) {
      for (UnitKind kind : {UnitKind::Vessel, UnitKind::Operator}) {
        if (current.buys(kind, w) == 0) continue;
        current.add_buys(kind, w, -1);
        const auto cost = feasible_cost(current, demand, params, costs);
        current.add_buys(kind, w, +1);
        if (cost && *cost < current_cost && (!best || *cost < best->cost)) {
          best = Candidate{w, kind, *cost};
        }
      }
    }
    if (!best) break;
    current.add_buys(best->kind, best->week_index, -1);
    current_cost = best->cost;
    trace.reductions.push_back(
        Reduction{trace.passes, best->week_index + 1, best->kind, 1, current_cost});
  }
  trace.final_cost = current_cost;
  return {std::move(current), std::move(trace)};
}

std::string format_trace_csv(const GreedyTrace& trace) {
  std::ostringstream out;
  out << "pass,week,kind,amount,cost_after\n";
  for (const auto& r : trace.reductions) {
    out << r.pass << ',' << r.week << ',' << (r.kind == UnitKind::Vessel ? "vessel" : "operator")
        << ',' << r.amount << ',' << r.cost_after.to_string() << '\n';
  }
  return out.str();
}

}  // namespace vesselplan::greedy
