#pragma once

#include <string>
#include <vector>

#include "vesselplan/domain.hpp"
#include "vesselplan/money.hpp"

namespace vesselplan::greedy {

struct Reduction {
  int pass = 0;  // 1-based scan that applied it
  int week = 0;  // 1-based
  UnitKind kind = UnitKind::Vessel;
  int amount = 0;
  Money cost_after;
};

struct GreedyTrace {
  Money initial_cost;
  int passes = 0;
  Money final_cost;
  std::vector<Reduction> reductions;
};

/// Just-in-time plan: walks the weeks in order and, whenever a week runs
/// short, buys exactly the shortfall one lead time earlier. Throws
/// InfeasibleError(Unseedable).
ProcurementPlan seed_plan(const DemandSeries& demand, const FleetParams& params,
                          const CostParams& costs);

/// Steepest-descent trimming: each pass tries every single-unit decrement and
/// applies the feasible one that saves the most. Ties go to the latest week,
/// then vessels before operators. Stops at a local minimum.
std::pair<ProcurementPlan, GreedyTrace> reduce(const ProcurementPlan& plan,
                                               const DemandSeries& demand,
                                               const FleetParams& params,
                                               const CostParams& costs);

/// `pass,week,kind,amount,cost_after`
std::string format_trace_csv(const GreedyTrace& trace);

}  // namespace vesselplan::greedy
