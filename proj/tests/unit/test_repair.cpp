#include <doctest.h>

#include "oracle.hpp"
#include "vesselplan/errors.hpp"
#include "vesselplan/model.hpp"

using namespace vesselplan;
using namespace vesselplan::model;

namespace {

const CostParams kCosts(Money::from_units(200), Money::from_units(50), Money::from_units(10),
                        Money::from_units(5), Money::from_units(10));

}  // namespace

TEST_SUITE("repair") {
  TEST_CASE("feasible plans come back unchanged") {
    const FleetParams f(2, 0.0, 2, 9, 3);
    const ProcurementPlan plan({1, 0, 0}, {3, 0, 0});
    CHECK(repair(plan, DemandSeries({1, 2, 1}), f, kCosts) == plan);
  }

  TEST_CASE("shortfalls are bought one week early") {
    const FleetParams f(2, 0.0, 2, 9, 3);
    const ProcurementPlan fixed = repair(ProcurementPlan(3), DemandSeries({1, 2, 1}), f, kCosts);
    CHECK(std::holds_alternative<Schedule>(simulate(fixed, DemandSeries({1, 2, 1}), f, kCosts)));
    // Week 2 needs 2 vessels with 1 rested: buy 1 in week 1. Operators: 5
    // spare after week 1, need 8: buy 3 in week 1 (2 instructors fit).
    CHECK(fixed == ProcurementPlan({1, 0, 0}, {3, 0, 0}));
  }

  TEST_CASE("excess operator buys are trimmed to instructor capacity") {
    const FleetParams f(2, 0.0, 1, 6, 2);
    // 2 spare skilled operators in week 1 can instruct 4 novices.
    const ProcurementPlan fixed = repair(ProcurementPlan({0, 0}, {9, 0}), DemandSeries({1, 0}), f, kCosts);
    CHECK(fixed.buys(UnitKind::Operator, 0) == 4);
  }

  TEST_CASE("week-one shortfalls are unrepairable") {
    const FleetParams f(2, 0.0, 0, 0, 2);
    try {
      repair(ProcurementPlan(2), DemandSeries({1, 1}), f, kCosts);
      FAIL("expected InfeasibleError");
    } catch (const InfeasibleError& e) {
      CHECK(e.code() == InfeasibleError::Code::Unrepairable);
      CHECK(e.week() == 1);
    }
  }

  TEST_CASE("repair only adds purchases beyond the trimmed operator buys") {
    Rng rng(5);
    for (int i = 0; i < 60; ++i) {
      const auto inst = testing::random_small_instance(rng, i % 2 ? Scenario::K20 : Scenario::Base);
      const int h = inst.demand.horizon();
      ProcurementPlan plan(h);
      for (int w = 0; w < h; ++w) plan.set_buys(UnitKind::Vessel, w, static_cast<int>(rng.uniform_int(0, 3)));
      const ProcurementPlan fixed = repair(plan, inst.demand, inst.fleet, inst.costs);
      for (int w = 0; w < h; ++w) CHECK(fixed.buys(UnitKind::Vessel, w) >= plan.buys(UnitKind::Vessel, w));
      CHECK(std::holds_alternative<Schedule>(simulate(fixed, inst.demand, inst.fleet, inst.costs)));
    }
  }
}
