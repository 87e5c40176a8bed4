#include "vesselplan/fleet_state.hpp"

#include <algorithm>
#include <cassert>

namespace vesselplan::model {

void UnitPool::add(int maint_weeks, int count) {
  if (count <= 0) return;
  auto it = std::lower_bound(cohorts_.begin(), cohorts_.end(), maint_weeks,
                             [](const UnitCohort& c, int w) { return c.maint_weeks < w; });
  if (it != cohorts_.end() && it->maint_weeks == maint_weeks) {
    it->count += count;
  } else {
    cohorts_.insert(it, UnitCohort{maint_weeks, count});
  }
  size_ += count;
}

void UnitPool::add(const UnitPool& other) {
  for (const auto& c : other.cohorts_) add(c.maint_weeks, c.count);
}

UnitPool UnitPool::take(int n) {
  assert(n >= 0 && n <= size_);
  UnitPool taken;
  std::size_t i = 0;
  while (n > 0 && i < cohorts_.size()) {
    auto& c = cohorts_[i];
    const int k = std::min(n, c.count);
    taken.cohorts_.push_back(UnitCohort{c.maint_weeks, k});
    taken.size_ += k;
    c.count -= k;
    size_ -= k;
    n -= k;
    if (c.count == 0) ++i;
  }
  cohorts_.erase(cohorts_.begin(), cohorts_.begin() + static_cast<std::ptrdiff_t>(i));
  return taken;
}

void UnitPool::age_one_week() {
  for (auto& c : cohorts_) ++c.maint_weeks;
}

void UnitPool::clear() {
  cohorts_.clear();
  size_ = 0;
}

FleetState FleetState::initial(const FleetParams& params) {
  FleetState s;
  s.vessels.available.add(0, params.initial_vessels());
  s.operators.available.add(0, params.initial_operators());
  return s;
}

}  // namespace vesselplan::model
