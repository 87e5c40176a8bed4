#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vesselplan/money.hpp"

namespace vesselplan {

/// Rounds x to the nearest integer, ties toward +infinity.
int round_half_up(double x);

/// Unit prices. P_C, P_O, P_Ot, P_Om, P_Cm in the cost objective.
class CostParams {
 public:
  CostParams(Money vessel_price, Money operator_price, Money training_price,
             Money operator_maint_price, Money vessel_maint_price);

  Money vessel_price() const { return vessel_price_; }
  Money operator_price() const { return operator_price_; }
  /// Per operator-week of training, charged to trainees and instructors alike.
  Money training_price() const { return training_price_; }
  Money operator_maint_price() const { return operator_maint_price_; }
  Money vessel_maint_price() const { return vessel_maint_price_; }

  friend bool operator==(const CostParams&, const CostParams&) = default;

 private:
  Money vessel_price_;
  Money operator_price_;
  Money training_price_;
  Money operator_maint_price_;
  Money vessel_maint_price_;
};

enum class Scenario { Base, K20, K10G20 };

std::string_view scenario_name(Scenario s);
/// Accepts "base", "k20", "k10g20".
Scenario parse_scenario(std::string_view name);

class FleetParams {
 public:
  FleetParams(int instruct_capacity, double attrition_rate, int initial_vessels,
              int initial_operators, int horizon);

  /// G: novices a single skilled operator can instruct per week.
  int instruct_capacity() const { return instruct_capacity_; }
  /// K: fraction of in-use units destroyed per working week.
  double attrition_rate() const { return attrition_rate_; }
  int initial_vessels() const { return initial_vessels_; }
  int initial_operators() const { return initial_operators_; }
  int horizon() const { return horizon_; }

  /// Base keeps K and G from the file; k20 sets K=0.20; k10g20 sets K=0.10, G=20.
  FleetParams with_scenario(Scenario s) const;
  FleetParams with_horizon(int horizon) const;

  friend bool operator==(const FleetParams&, const FleetParams&) = default;

 private:
  int instruct_capacity_;
  double attrition_rate_;
  int initial_vessels_;
  int initial_operators_;
  int horizon_;
};

/// Robots required per week, R_1..R_n (stored 0-based).
class DemandSeries {
 public:
  DemandSeries() = default;
  explicit DemandSeries(std::vector<int> values);

  int horizon() const { return static_cast<int>(values_.size()); }
  std::span<const int> values() const { return values_; }
  /// 0-based week index.
  int operator[](std::size_t i) const { return values_[i]; }
  int max() const;
  std::int64_t sum() const;

  friend bool operator==(const DemandSeries&, const DemandSeries&) = default;

 private:
  std::vector<int> values_;
};

enum class UnitKind { Vessel, Operator };

/// The decision vector: weekly vessel and operator purchase counts.
///
/// Gene layout for the genetic operators is [vessels..., operators...], so
/// gene g < horizon is a vessel buy and gene horizon + w is an operator buy.
class ProcurementPlan {
 public:
  ProcurementPlan() = default;
  explicit ProcurementPlan(int horizon);
  ProcurementPlan(std::vector<int> vessel_buys, std::vector<int> operator_buys);

  int horizon() const { return static_cast<int>(vessel_buys_.size()); }
  std::span<const int> vessel_buys() const { return vessel_buys_; }
  std::span<const int> operator_buys() const { return operator_buys_; }

  int buys(UnitKind kind, int week_index) const;
  void set_buys(UnitKind kind, int week_index, int count);
  void add_buys(UnitKind kind, int week_index, int delta);

  int gene_count() const { return 2 * horizon(); }
  int gene(int g) const;
  void set_gene(int g, int value);

  std::int64_t total_units() const;

  friend bool operator==(const ProcurementPlan&, const ProcurementPlan&) = default;

 private:
  std::vector<int> vessel_buys_;
  std::vector<int> operator_buys_;
};

struct ProblemConfig {
  CostParams costs;
  FleetParams fleet;

  friend bool operator==(const ProblemConfig&, const ProblemConfig&) = default;
};

/// Parses the flat `key = value` config format. Blank lines and `#` comments
/// are ignored; every key is required and unknown keys are rejected.
ProblemConfig parse_config(std::string_view text);
ProblemConfig load_config(const std::filesystem::path& path);
std::string format_config(const ProblemConfig& config);

/// Seeded, mean-reverting bounded walk around `level`, clamped to
/// [0, 2*level] and rounded half-up.
DemandSeries gen_demand(int horizon, std::uint64_t seed, double level, double volatility);

/// CSV with header `week,demand` and contiguous weeks 1..n.
DemandSeries parse_demand_csv(std::string_view text);
DemandSeries load_demand_csv(const std::filesystem::path& path);
std::string format_demand_csv(const DemandSeries& demand);

/// Reads a whole file; throws IoError on failure.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace vesselplan
