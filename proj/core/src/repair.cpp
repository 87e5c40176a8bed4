#include <algorithm>

#include "vesselplan/errors.hpp"
#include "vesselplan/model.hpp"

namespace vesselplan::model {

ProcurementPlan repair(const ProcurementPlan& plan, const DemandSeries& demand,
                       const FleetParams& params, const CostParams& costs) {
  ProcurementPlan out = plan;
  // Operator units this routine has added per week; only the caller's own
  // units are eligible for trimming.
  std::vector<int> added(static_cast<std::size_t>(plan.horizon()), 0);
  const int g = params.instruct_capacity();

  constexpr int kMaxRounds = 1'000'000;
  for (int round = 0; round < kMaxRounds; ++round) {
    SimulationResult result = simulate(out, demand, params, costs);
    const auto* bad = std::get_if<Infeasibility>(&result);
    if (bad == nullptr) return out;

    const int idx = bad->week - 1;
    const int earlier = idx - 1;
    switch (bad->kind) {
      case Infeasibility::Kind::InsufficientVessels:
        if (earlier < 0)
          throw InfeasibleError(InfeasibleError::Code::Unrepairable, bad->week, bad->message());
        out.add_buys(UnitKind::Vessel, earlier, bad->shortfall);
        break;

      case Infeasibility::Kind::InsufficientOperators:
        if (earlier < 0)
          throw InfeasibleError(InfeasibleError::Code::Unrepairable, bad->week, bad->message());
        out.add_buys(UnitKind::Operator, earlier, bad->shortfall);
        added[static_cast<std::size_t>(earlier)] += bad->shortfall;
        break;

      case Infeasibility::Kind::InsufficientInstructors: {
        const int buys = out.buys(UnitKind::Operator, idx);
        const int spare = (buys + g - 1) / g - bad->shortfall;
        const int capacity = spare * g;
        const int own_added = added[static_cast<std::size_t>(idx)];
        const int trimmed = std::max(capacity, own_added);
        if (trimmed < buys) {
          out.set_buys(UnitKind::Operator, idx, trimmed);
          break;
        }
        // Repair's own purchases exceed capacity: grow the skilled pool.
        if (earlier < 0)
          throw InfeasibleError(InfeasibleError::Code::Unrepairable, bad->week, bad->message());
        out.add_buys(UnitKind::Operator, earlier, bad->shortfall);
        added[static_cast<std::size_t>(earlier)] += bad->shortfall;
        break;
      }
    }
  }
  throw InfeasibleError(InfeasibleError::Code::Unrepairable, 0, "repair did not converge");
}

}  // namespace vesselplan::model
