// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Tolerances are pinned here.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "cli.hpp"
#include "oracle.hpp"
#include "vesselplan/errors.hpp"
#include "vesselplan/forecast.hpp"
#include "vesselplan/greedy.hpp"
#include "vesselplan/metaheuristic.hpp"
#include "vesselplan/model.hpp"

using namespace vesselplan;
namespace fs = std::filesystem;
namespace fc = vesselplan::forecast;

namespace {

constexpr int kTinyInstances = 50;
constexpr int kTinyOptimalRequired = 45;
constexpr double kTinyMaxGap = 0.05;
constexpr std::int64_t kTinyEvalCap = 10'000;

constexpr int kFeasibilityRuns = 200;
constexpr std::int64_t kFeasibilityEvalCap = 5'000;

constexpr int kBenchSeeds = 20;
constexpr std::int64_t kBenchEvalCap = 20'000;
constexpr double kIterationRatio = 0.7;

constexpr int kArimaSeeds = 20;
constexpr int kArimaLength = 2000;
constexpr double kArimaMedianError = 0.15;
constexpr int kWhitenessRequired = 16;
constexpr int kWhitenessLags = 20;
constexpr double kArimaLambda = 1.0;

constexpr int kPredictorModels = 100;
constexpr int kPredictorHorizon = 12;
constexpr double kPredictorTol = 1e-9;
constexpr double kClosedFormTol = 1e-12;

constexpr int kRoundTrips = 1000;

struct Verdict {
  bool pass;
  std::string detail;
};

// Schedules collected from criteria 1-3 for the conservation check.
struct Collected {
  model::Schedule schedule;
  FleetParams fleet;
  std::string origin;
};
std::vector<Collected> g_schedules;

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& tag) {
    path = fs::temp_directory_path() / ("vesselplan_accept_" + tag + "_" + std::to_string(::getpid()));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

int run_cli(const std::vector<std::string>& args, std::string* out = nullptr) {
  std::ostringstream o, e;
  const int code = cli::run(args, o, e);
  if (out) *out = o.str() + e.str();
  return code;
}

std::string fixed(double v, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

// The 26-week benchmark instance: example prices and fleet, synthetic demand.
ProblemConfig bench_config() {
  CostParams costs(Money::from_units(200), Money::from_units(50), Money::from_units(10),
                   Money::from_units(5), Money::from_units(10));
  return ProblemConfig{costs, FleetParams(5, 0.0, 60, 250, 26)};
}

// --- 1 --------------------------------------------------------------------

Verdict oracle_optimality() {
  Rng rng(2024);
  int optimal = 0, solved = 0, skipped = 0;
  double worst_gap = 0.0;
  while (solved < kTinyInstances) {
    const auto inst = testing::random_tiny_instance(rng);
    std::optional<testing::OracleResult> opt;
    try {
      opt = testing::brute_force_optimum(inst.demand, inst.fleet, inst.costs, 8);
    } catch (const std::invalid_argument&) {
      ++skipped;
      continue;
    }
    if (!opt) {
      ++skipped;
      continue;
    }
    meta::SolverConfig sc;
    sc.max_iterations = kTinyEvalCap;
    sc.rng_seed = static_cast<std::uint64_t>(solved + 1);
    const auto res = meta::solve(inst.demand, inst.fleet, inst.costs, sc, meta::AnnealSchedule{}, true);
    g_schedules.push_back({res.schedule, inst.fleet, "tiny#" + std::to_string(solved)});
    ++solved;

    const Money cost = res.schedule.total_cost;
    if (cost < opt->cost) return {false, "solver beat the oracle on instance " + std::to_string(solved)};
    if (cost == opt->cost) {
      ++optimal;
    } else {
      const double gap = opt->cost.cents() == 0
                             ? 1e9
                             : (cost - opt->cost).to_double() / opt->cost.to_double();
      worst_gap = std::max(worst_gap, gap);
    }
  }
  return {optimal >= kTinyOptimalRequired && worst_gap <= kTinyMaxGap,
          "optimal " + std::to_string(optimal) + "/" + std::to_string(kTinyInstances) +
              ", worst gap " + fixed(100.0 * worst_gap, 2) + "%, skipped infeasible " +
              std::to_string(skipped)};
}

// --- 2 --------------------------------------------------------------------

ProcurementPlan plan_of(const model::Schedule& s) {
  std::vector<int> v, o;
  for (const auto& r : s.weeks) {
    v.push_back(r.vessel_buys);
    o.push_back(r.operator_buys);
  }
  return ProcurementPlan(v, o);
}

Verdict feasibility_always() {
  TempDir dir("feas");
  Rng rng(77);
  const Scenario scenarios[] = {Scenario::Base, Scenario::K20, Scenario::K10G20};
  int valid = 0, infeasible = 0;
  std::vector<std::string> failures;
  for (int i = 0; i < kFeasibilityRuns; ++i) {
    const Scenario sc = scenarios[i % 3];
    const auto inst = testing::random_small_instance(rng, sc);
    write_text_file(dir / "c.conf", format_config(ProblemConfig{inst.costs, inst.fleet}));
    write_text_file(dir / "d.csv", format_demand_csv(inst.demand));
    const std::string scenario(scenario_name(sc));
    const std::string out_dir = dir / ("run" + std::to_string(i));

    const int solve_code =
        run_cli({"solve", "--config", dir / "c.conf", "--demand", dir / "d.csv", "--seed",
                 std::to_string(i + 1), "--out-dir", out_dir, "--scenario", scenario, "--max-evals",
                 std::to_string(kFeasibilityEvalCap)});
    if (solve_code == cli::kInfeasible) {
      ++infeasible;
      continue;
    }
    std::string report;
    const int validate_code =
        run_cli({"validate", "--schedule", out_dir + "/schedule.csv", "--demand", dir / "d.csv",
                 "--config", dir / "c.conf", "--scenario", scenario},
                &report);
    if (solve_code != cli::kOk || validate_code != cli::kOk) {
      failures.push_back("run " + std::to_string(i) + " solve=" + std::to_string(solve_code) +
                         " validate=" + std::to_string(validate_code) + " " + report);
      continue;
    }
    ++valid;

    // The CSV must match a re-simulation of its own buys; the simulated
    // copy carries the owned tallies for criterion 4.
    const auto parsed = model::parse_schedule_csv(read_text_file(out_dir + "/schedule.csv"));
    auto sim = model::simulate(plan_of(parsed), inst.demand, inst.fleet, inst.costs);
    auto* sched = std::get_if<model::Schedule>(&sim);
    if (!sched) {
      failures.push_back("run " + std::to_string(i) + ": emitted plan does not simulate");
      continue;
    }
    model::Schedule stripped = *sched;
    for (auto& r : stripped.weeks) {
      r.vessels_owned.reset();
      r.operators_owned.reset();
    }
    if (!(stripped == parsed)) {
      failures.push_back("run " + std::to_string(i) + ": CSV differs from re-simulation");
      continue;
    }
    g_schedules.push_back({*sched, inst.fleet, "feasibility#" + std::to_string(i)});
    fs::remove_all(out_dir);
  }
  std::string detail = std::to_string(valid) + "/" + std::to_string(kFeasibilityRuns) +
                       " valid, infeasible instances " + std::to_string(infeasible);
  if (!failures.empty()) detail += "; first failure: " + failures.front();
  return {failures.empty() && valid + infeasible == kFeasibilityRuns && infeasible == 0, detail};
}

// --- 3 --------------------------------------------------------------------

std::vector<meta::ConvergenceTrace> g_bench_traces;

Verdict greedy_seeding_gain() {
  const ProblemConfig cfg = bench_config();
  const DemandSeries demand = gen_demand(26, 42, 30.0, 0.2);
  std::vector<double> hy_iters, hy_cost, ga_iters, ga_cost;
  for (int s = 1; s <= kBenchSeeds; ++s) {
    meta::SolverConfig sc;
    sc.max_iterations = kBenchEvalCap;
    sc.rng_seed = static_cast<std::uint64_t>(s);
    const meta::AnnealSchedule as;
    const auto hy = meta::solve(demand, cfg.fleet, cfg.costs, sc, as, true);
    const auto ga = meta::solve_plain_ga(demand, cfg.fleet, cfg.costs, sc, as);
    hy_iters.push_back(static_cast<double>(hy.iterations_to_best));
    ga_iters.push_back(static_cast<double>(ga.iterations_to_best));
    hy_cost.push_back(hy.schedule.total_cost.to_double());
    ga_cost.push_back(ga.schedule.total_cost.to_double());
    g_schedules.push_back({hy.schedule, cfg.fleet, "bench-hybrid#" + std::to_string(s)});
    g_schedules.push_back({ga.schedule, cfg.fleet, "bench-ga#" + std::to_string(s)});
    g_bench_traces.push_back(hy.trace);
    g_bench_traces.push_back(ga.trace);
  }
  const double hi = median(hy_iters), gi = median(ga_iters);
  const double hc = median(hy_cost), gc = median(ga_cost);
  return {hi <= kIterationRatio * gi && hc <= gc,
          "median iterations " + fixed(hi, 1) + " vs " + fixed(gi, 1) + " (ratio " +
              fixed(gi > 0 ? hi / gi : 0.0, 4) + "), median cost " + fixed(hc, 2) + " vs " +
              fixed(gc, 2)};
}

// --- 4 --------------------------------------------------------------------

// Recomputes the owned tallies from buys, discards and destructions alone.
std::string conservation_error(const Collected& c) {
  long v = c.fleet.initial_vessels();
  long o = c.fleet.initial_operators();
  for (const auto& r : c.schedule.weeks) {
    v += r.vessel_buys - r.vessel_discards - r.vessels_destroyed;
    o += r.operator_buys - r.operator_discards - r.operators_destroyed;
    if (!r.vessels_owned || !r.operators_owned) return "missing tallies";
    if (*r.vessels_owned != v || *r.operators_owned != o) {
      return "week " + std::to_string(r.week) + " owned " + std::to_string(*r.vessels_owned) + "/" +
             std::to_string(*r.operators_owned) + " expected " + std::to_string(v) + "/" +
             std::to_string(o);
    }
    if (v < 0 || o < 0) return "negative fleet at week " + std::to_string(r.week);
  }
  return {};
}

Verdict conservation() {
  std::size_t weeks = 0;
  for (const auto& c : g_schedules) {
    const std::string err = conservation_error(c);
    if (!err.empty()) return {false, c.origin + ": " + err};
    weeks += c.schedule.weeks.size();
  }
  return {!g_schedules.empty(), std::to_string(g_schedules.size()) + " schedules, " +
                                    std::to_string(weeks) + " weeks checked"};
}

// --- 5 --------------------------------------------------------------------

Verdict temperature_mechanics() {
  std::vector<std::string> bad;
  meta::AnnealSchedule s;
  s.cooling = 0.9;
  if (std::abs(meta::anneal_step(2.0, true, s) - 1.8) > 1e-12) bad.push_back("T=2 improved");
  if (std::abs(meta::anneal_step(2.0, false, s) - 1.8) > 1e-12) bad.push_back("T=2 plain");
  const double warm = 3.0 + 0.5 * std::log(2.0);
  if (std::abs(meta::anneal_step(3.0, true, s) - 0.9 * warm) > 1e-12) bad.push_back("T=3 reheat");
  if (std::abs(meta::anneal_step(1.0000001, true, s) - 0.9 * 1.0000001) > 1e-15) bad.push_back("guard");
  if (meta::reheat_applies(1.0)) bad.push_back("guard at 1");

  // Strict termination below 0.01.
  meta::AnnealSchedule fast;
  fast.initial_temp = 1.0;
  fast.cooling = 0.5;
  meta::SolverConfig sc;
  sc.population_size = 6;
  sc.max_iterations = 1'000'000;
  const auto res = meta::solve(DemandSeries({1, 1, 0}), FleetParams(2, 0.0, 1, 6, 3),
                               bench_config().costs, sc, fast, true);
  const auto& recs = res.trace.records;
  if (recs.empty() || recs.back().temperature >= fast.termination_temp) bad.push_back("did not cool");
  for (std::size_t i = 0; i + 1 < recs.size(); ++i) {
    if (recs[i].temperature < fast.termination_temp) bad.push_back("ran past termination");
  }

  std::size_t records = 0;
  for (const auto& t : g_bench_traces) {
    for (std::size_t i = 1; i < t.records.size(); ++i) {
      if (t.records[i].best_cost > t.records[i - 1].best_cost) {
        bad.push_back("best cost rose in a bench trace");
        break;
      }
    }
    records += t.records.size();
  }
  if (g_bench_traces.empty()) bad.push_back("no bench traces");
  std::string detail = std::to_string(g_bench_traces.size()) + " traces (" + std::to_string(records) +
                       " records) monotone, termination after " + std::to_string(recs.size()) +
                       " records";
  if (!bad.empty()) detail = "failed: " + bad.front();
  return {bad.empty(), detail};
}

// --- 6 --------------------------------------------------------------------

Verdict arima_recovery() {
  const std::vector<double> gamma{-1.016, -0.877, -0.860};
  const std::vector<double> theta{-1.323, -0.718, 0.324};
  const fc::ArimaOrder order(3, 1, 4);
  std::vector<double> errors;
  int white = 0;
  int df = 0;
  for (int seed = 1; seed <= kArimaSeeds; ++seed) {
    Rng rng(static_cast<std::uint64_t>(seed));
    const auto y = testing::simulate_arima(gamma, theta, 1, kArimaLength, 200, rng);
    const auto fit = fc::rls_fit(y, order, kArimaLambda);
    for (std::size_t i = 0; i < gamma.size(); ++i) errors.push_back(std::abs(fit.model.ar_coeffs[i] - gamma[i]));
    const auto w = fc::whiteness_check(fit.residuals, kWhitenessLags, order.p + order.q);
    df = w.degrees_of_freedom;
    white += w.pass;
  }
  const double med = median(errors);
  return {med <= kArimaMedianError && white >= kWhitenessRequired,
          "median |AR error| " + fixed(med, 4) + ", max " +
              fixed(*std::max_element(errors.begin(), errors.end()), 4) + ", whiteness " +
              std::to_string(white) + "/" + std::to_string(kArimaSeeds) + " (df " + std::to_string(df) + ")"};
}

// --- 7 --------------------------------------------------------------------

Verdict predictor_agreement() {
  Rng rng(7);
  double worst = 0.0;
  for (int i = 0; i < kPredictorModels; ++i) {
    const fc::ArimaModel m = testing::random_arima_model(rng);
    auto history = testing::simulate_arima(m.ar_coeffs, m.ma_coeffs, m.order.d, 60, 30, rng);
    for (double& v : history) v += 5.0;
    for (int k = 1; k <= kPredictorHorizon; ++k) {
      const double a = fc::astrom_predict(m, history, k);
      const double b = fc::conditional_expectation_predict(m, history, k);
      worst = std::max(worst, std::abs(a - b) / std::max(1.0, std::abs(b)));
    }
  }
  const fc::ArimaModel ar1(fc::ArimaOrder(1, 0, 0), {0.5}, {}, 0.0, 1.0);
  const std::vector<double> h{8.0};
  const double e1 = std::abs(fc::astrom_predict(ar1, h, 1) - 4.0);
  const double e2 = std::abs(fc::astrom_predict(ar1, h, 2) - 2.0);
  const bool closed = e1 <= kClosedFormTol && e2 <= kClosedFormTol;
  return {worst <= kPredictorTol && closed,
          "worst relative gap " + fixed(worst * 1e12, 3) + "e-12 over " + std::to_string(kPredictorModels) +
              " models, AR(1) 8->4->2 " + (closed ? "exact" : "off")};
}

// --- 8 --------------------------------------------------------------------

Verdict differencing_round_trip() {
  Rng rng(8);
  int ok = 0;
  for (int i = 0; i < kRoundTrips; ++i) {
    const int d = i % 3;
    std::vector<double> x(static_cast<std::size_t>(rng.uniform_int(d + 1, 60)));
    for (double& v : x) v = static_cast<double>(rng.uniform_int(-1'000'000, 1'000'000));
    const auto diff = fc::difference(x, d);
    ok += fc::integrate(diff.values, diff.initial, d) == x;
  }
  return {ok == kRoundTrips, std::to_string(ok) + "/" + std::to_string(kRoundTrips) + " exact"};
}

// --- 9 --------------------------------------------------------------------

std::map<std::string, std::string> snapshot(const fs::path& dir) {
  std::map<std::string, std::string> files;
  for (const auto& e : fs::recursive_directory_iterator(dir)) {
    if (e.is_regular_file()) files[fs::relative(e.path(), dir).string()] = read_text_file(e.path());
  }
  return files;
}

Verdict determinism() {
  TempDir dir("det");
  const std::string cfg = dir / "c.conf";
  write_text_file(cfg, format_config(bench_config()));
  if (run_cli({"gen-demand", "--horizon", "26", "--seed", "42", "--out", dir / "d.csv"}) != cli::kOk ||
      run_cli({"gen-demand", "--horizon", "104", "--seed", "5", "--out", dir / "long.csv"}) != cli::kOk) {
    return {false, "gen-demand failed"};
  }

  const std::vector<std::vector<std::string>> commands{
      {"solve", "--config", cfg, "--demand", dir / "d.csv", "--seed", "3", "--out-dir", dir / "out/solve",
       "--max-evals", "3000"},
      {"forecast", "--demand", dir / "long.csv", "--order", "3,1,4", "--horizon", "8", "--out-dir",
       dir / "out/forecast"},
      {"bench", "--config", cfg, "--demand", dir / "d.csv", "--seeds", "2", "--out", dir / "out/bench/b.csv",
       "--max-evals", "2000"},
  };
  std::size_t compared = 0;
  for (const auto& cmd : commands) {
    std::string first_out, second_out;
    if (run_cli(cmd, &first_out) != cli::kOk) return {false, cmd[0] + " failed: " + first_out};
    const auto first = snapshot(dir.path / "out");
    if (run_cli(cmd, &second_out) != cli::kOk) return {false, cmd[0] + " rerun failed"};
    const auto second = snapshot(dir.path / "out");
    if (first != second || first_out != second_out) return {false, cmd[0] + " output differs on rerun"};
    compared = second.size();
  }
  return {true, std::to_string(compared) + " files byte-identical across reruns"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    std::function<Verdict()> check;
  };
  const std::vector<Criterion> criteria{
      {1, "oracle optimality on tiny instances", oracle_optimality},
      {2, "solve output always validates", feasibility_always},
      {3, "greedy seeding reduces iterations to best", greedy_seeding_gain},
      {4, "fleet conservation", conservation},
      {5, "temperature mechanics", temperature_mechanics},
      {6, "ARIMA(3,1,4) coefficient recovery", arima_recovery},
      {7, "Astrom predictor matches conditional expectation", predictor_agreement},
      {8, "differencing round trip", differencing_round_trip},
      {9, "deterministic reruns", determinism},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !v.pass;
    std::cout << "criterion " << c.id << " " << (v.pass ? "PASS" : "FAIL") << "  " << c.name << ": "
              << v.detail << " [" << fixed(secs, 1) << "s]" << std::endl;
  }
  std::cout << (failed ? "FAILED " + std::to_string(failed) + " of 9" : std::string("ALL 9 PASSED"))
            << std::endl;
  return failed ? 1 : 0;
}
