#pragma once

#include <vector>

#include "vesselplan/domain.hpp"

namespace vesselplan::model {

/// Units sharing one cumulative-maintenance count.
struct UnitCohort {
  int maint_weeks = 0;
  int count = 0;

  friend bool operator==(const UnitCohort&, const UnitCohort&) = default;
};

/// A count-compressed unit ledger for one status. Ledger order is ascending
/// maint_weeks: the least-worn units are deployed (and struck) first.
class UnitPool {
 public:
  int size() const { return size_; }
  bool empty() const { return size_ == 0; }
  const std::vector<UnitCohort>& cohorts() const { return cohorts_; }

  void add(int maint_weeks, int count);
  void add(const UnitPool& other);
  /// Removes the first `n` units in ledger order. Requires n <= size().
  UnitPool take(int n);
  /// Every unit's counter +1.
  void age_one_week();
  void clear();

  friend bool operator==(const UnitPool&, const UnitPool&) = default;

 private:
  std::vector<UnitCohort> cohorts_;
  int size_ = 0;
};

struct VesselLedger {
  UnitPool available;
  UnitPool in_use;
  UnitPool maintenance;
  UnitPool commissioning;

  int total() const {
    return available.size() + in_use.size() + maintenance.size() + commissioning.size();
  }
  friend bool operator==(const VesselLedger&, const VesselLedger&) = default;
};

/// Operators in `training` are novices; every other status holds skilled units.
struct OperatorLedger {
  UnitPool available;
  UnitPool in_use;
  UnitPool maintenance;
  UnitPool training;
  UnitPool instructing;

  int total() const {
    return available.size() + in_use.size() + maintenance.size() + training.size() +
           instructing.size();
  }
  int skilled() const { return total() - training.size(); }
  friend bool operator==(const OperatorLedger&, const OperatorLedger&) = default;
};

/// Fleet at the end of `week` (week 0 is the opening position).
struct FleetState {
  int week = 0;
  VesselLedger vessels;
  OperatorLedger operators;

  /// Opening fleet: every initial unit available, skilled, unworn.
  static FleetState initial(const FleetParams& params);

  friend bool operator==(const FleetState&, const FleetState&) = default;
};

}  // namespace vesselplan::model
