#include <doctest.h>

#include <algorithm>

#include "oracle.hpp"
#include "vesselplan/errors.hpp"
#include "vesselplan/model.hpp"

using namespace vesselplan;
using namespace vesselplan::model;

namespace {

const CostParams kCosts(Money::from_units(200), Money::from_units(50), Money::from_units(10),
                        Money::from_units(5), Money::from_units(10));

Schedule hand_schedule() {
  const FleetParams f(2, 0.0, 2, 9, 3);
  return std::get<Schedule>(
      simulate(ProcurementPlan({1, 0, 0}, {3, 0, 0}), DemandSeries({1, 2, 1}), f, kCosts));
}

bool has(const std::vector<Violation>& v, Constraint c, int week) {
  return std::any_of(v.begin(), v.end(),
                     [&](const Violation& x) { return x.constraint == c && x.week == week; });
}

}  // namespace

TEST_SUITE("validator") {
  TEST_CASE("simulated schedules validate clean") {
    const FleetParams f(2, 0.0, 2, 9, 3);
    CHECK(validate(hand_schedule(), DemandSeries({1, 2, 1}), f, kCosts).empty());

    Rng rng(11);
    for (int i = 0; i < 40; ++i) {
      const Scenario sc = i % 3 == 0 ? Scenario::Base : (i % 3 == 1 ? Scenario::K20 : Scenario::K10G20);
      const auto inst = testing::random_small_instance(rng, sc);
      ProcurementPlan plan(inst.demand.horizon());
      const auto result = simulate(repair(plan, inst.demand, inst.fleet, inst.costs), inst.demand,
                                   inst.fleet, inst.costs);
      const auto& s = std::get<Schedule>(result);
      CHECK(validate(s, inst.demand, inst.fleet, inst.costs).empty());
    }
  }

  TEST_CASE("deployment differing from demand is EQ7") {
    Schedule s = hand_schedule();
    s.weeks[1].robots_deployed = 1;
    const auto v = validate(s, DemandSeries({1, 2, 1}), FleetParams(2, 0.0, 2, 9, 3), kCosts);
    CHECK(has(v, Constraint::Eq7Usage, 2));
  }

  TEST_CASE("missing weeks are EQ7") {
    const auto v = validate(Schedule{}, DemandSeries({1, 2}), FleetParams(2, 0.0, 2, 9, 2), kCosts);
    CHECK(v.size() == 2);
    CHECK(has(v, Constraint::Eq7Usage, 1));
    CHECK(has(v, Constraint::Eq7Usage, 2));
  }

  TEST_CASE("vessel oversubscription is a supply violation") {
    Schedule s = hand_schedule();
    s.weeks[0].vessel_buys = 0;
    s.weeks[0].vessels_owned.reset();
    s.weeks[1].vessels_owned.reset();
    s.weeks[2].vessels_owned.reset();
    const auto v = validate(s, DemandSeries({1, 2, 1}), FleetParams(2, 0.0, 2, 9, 3), kCosts);
    CHECK(has(v, Constraint::Eq13Commissioning, 2));
    const auto v2 = validate(s, DemandSeries({1, 2, 1}), FleetParams(2, 0.2, 2, 9, 3), kCosts);
    CHECK(has(v2, Constraint::Eq18AttritionSupply, 2));
  }

  TEST_CASE("operator shortage is EQ9, instructor shortage is EQ11") {
    Schedule s = hand_schedule();
    for (auto& w : s.weeks) w.operators_owned.reset();
    Schedule short_crew = s;
    short_crew.weeks[0].operator_buys = 1;
    short_crew.weeks[0].trainees = 1;
    short_crew.weeks[0].instructors = 1;
    const FleetParams f(2, 0.0, 2, 9, 3);
    CHECK(has(validate(short_crew, DemandSeries({1, 2, 1}), f, kCosts), Constraint::Eq9OperatorUsage, 2));

    Schedule wrong_instructors = s;
    wrong_instructors.weeks[0].instructors = 1;
    CHECK(has(validate(wrong_instructors, DemandSeries({1, 2, 1}), f, kCosts), Constraint::Eq11Instructors, 1));

    Schedule too_many = s;
    too_many.weeks[0].operator_buys = 11;
    too_many.weeks[0].trainees = 11;
    too_many.weeks[0].instructors = 6;
    CHECK(has(validate(too_many, DemandSeries({1, 2, 1}), f, kCosts), Constraint::Eq11Instructors, 1));
  }

  TEST_CASE("skipped maintenance is EQ12") {
    Schedule s = hand_schedule();
    s.weeks[1].operators_maint = 0;
    const auto v = validate(s, DemandSeries({1, 2, 1}), FleetParams(2, 0.0, 2, 9, 3), kCosts);
    CHECK(has(v, Constraint::Eq12Maintenance, 2));
  }

  TEST_CASE("wrong attrition count and broken conservation are EQ18") {
    const FleetParams f(1, 0.5, 4, 16, 3);
    const DemandSeries d({2, 2, 2});
    Schedule s = std::get<Schedule>(simulate(ProcurementPlan({0, 1, 0}, {4, 0, 0}), d, f, kCosts));
    REQUIRE(validate(s, d, f, kCosts).empty());

    Schedule lost = s;
    lost.weeks[1].vessels_destroyed = 0;
    lost.weeks[1].vessels_maint = 2;
    CHECK(has(validate(lost, d, f, kCosts), Constraint::Eq18AttritionSupply, 2));

    Schedule drift = s;
    drift.weeks[2].vessels_owned = *drift.weeks[2].vessels_owned + 1;
    CHECK(has(validate(drift, d, f, kCosts), Constraint::Eq18AttritionSupply, 3));
  }

  TEST_CASE("negative fields are NONNEG") {
    Schedule s = hand_schedule();
    s.weeks[2].vessel_buys = -1;
    const auto v = validate(s, DemandSeries({1, 2, 1}), FleetParams(2, 0.0, 2, 9, 3), kCosts);
    CHECK(has(v, Constraint::NonNeg, 3));
  }

  TEST_CASE("schedule csv round-trips without the owned tallies") {
    const Schedule s = hand_schedule();
    const std::string text = format_schedule_csv(s);
    CHECK(text.rfind("week,vessel_buys,operator_buys,vessel_discards,operator_discards,"
                     "vessels_destroyed,operators_destroyed,vessels_maint,operators_maint,"
                     "instructors,trainees,robots_deployed,week_cost\n", 0) == 0);
    CHECK(text.find("\ntotal,") != std::string::npos);
    const Schedule back = parse_schedule_csv(text);
    REQUIRE(back.weeks.size() == s.weeks.size());
    CHECK(back.total_cost == s.total_cost);
    for (std::size_t i = 0; i < s.weeks.size(); ++i) {
      WeekRecord expect = s.weeks[i];
      expect.vessels_owned.reset();
      expect.operators_owned.reset();
      CHECK(back.weeks[i] == expect);
    }
    CHECK(format_schedule_csv(back) == text);
    CHECK_THROWS_AS(parse_schedule_csv("week,foo\n"), FormatError);
    CHECK_THROWS_AS(parse_schedule_csv(text.substr(0, text.find('\n') + 1) + "1,2,3\n"), FormatError);
  }
}
