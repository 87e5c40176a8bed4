#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <chrono>
#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>
#include <utility>

#include <CLI11.hpp>

#include "vesselplan/domain.hpp"
#include "vesselplan/errors.hpp"
#include "vesselplan/forecast.hpp"
#include "vesselplan/greedy.hpp"
#include "vesselplan/metaheuristic.hpp"
#include "vesselplan/model.hpp"

#ifndef VESSELPLAN_VERSION
#define VESSELPLAN_VERSION "0.0.0"
#endif

namespace vesselplan::cli {

namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

std::string fmt(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::int64_t elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

/// Flat `key = value` record of one invocation. wall_ms is 0 unless timing
/// was requested.
class Manifest {
 public:
  explicit Manifest(std::string command) { set("command", std::move(command)); }

  void set(const std::string& key, std::string value) { fields_.emplace_back(key, std::move(value)); }

  std::string format() const {
    std::ostringstream os;
    for (const auto& [k, v] : fields_) os << k << " = " << v << '\n';
    return os.str();
  }

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory " + dir.string() + ": " + ec.message());
}

void ensure_parent(const fs::path& file) {
  if (file.has_parent_path()) ensure_dir(file.parent_path());
}

struct Problem {
  ProblemConfig config;
  DemandSeries demand;
  FleetParams fleet;
};

// The demand file fixes the horizon; the scenario overrides K and G.
Problem load_problem(const std::string& config_path, const std::string& demand_path,
                     const std::string& scenario) {
  ProblemConfig config = load_config(config_path);
  DemandSeries demand = load_demand_csv(demand_path);
  FleetParams fleet =
      config.fleet.with_horizon(demand.horizon()).with_scenario(parse_scenario(scenario));
  return Problem{config, std::move(demand), fleet};
}

struct SolverFlags {
  std::optional<std::int64_t> max_evals;
  std::optional<int> population;
  std::optional<double> initial_temp;
  std::optional<double> cooling;

  void add_to(CLI::App* app) {
    app->add_option("--max-evals", max_evals, "Cap on fitness evaluations")->check(CLI::PositiveNumber);
    app->add_option("--population", population, "Population size")->check(CLI::Range(2, 100000));
    app->add_option("--initial-temp", initial_temp, "Initial annealing temperature");
    app->add_option("--cooling", cooling, "Cooling factor in (0,1)");
  }

  void apply(meta::SolverConfig& sc, meta::AnnealSchedule& as) const {
    if (max_evals) sc.max_iterations = *max_evals;
    if (population) sc.population_size = *population;
    if (initial_temp) as.initial_temp = *initial_temp;
    if (cooling) as.cooling = *cooling;
    sc.validate();
    as.validate();
  }

  void record(Manifest& m, const meta::SolverConfig& sc, const meta::AnnealSchedule& as) const {
    m.set("population_size", std::to_string(sc.population_size));
    m.set("max_evaluations", std::to_string(sc.max_iterations));
    m.set("initial_temp", fmt(as.initial_temp));
    m.set("cooling", fmt(as.cooling));
    m.set("termination_temp", fmt(as.termination_temp));
  }
};

// --- gen-demand ------------------------------------------------------------

struct GenDemandArgs {
  int horizon = 0;
  std::uint64_t seed = 0;
  double level = 30.0;
  double volatility = 0.2;
  std::string out;
};

int cmd_gen_demand(const GenDemandArgs& a) {
  const DemandSeries demand = gen_demand(a.horizon, a.seed, a.level, a.volatility);
  ensure_parent(a.out);
  write_text_file(a.out, format_demand_csv(demand));
  return kOk;
}

// --- solve -----------------------------------------------------------------

struct SolveArgs {
  std::string config;
  std::string demand;
  std::uint64_t seed = 1;
  std::string out_dir;
  std::string scenario = "base";
  bool no_greedy_seed = false;
  bool timing = false;
  SolverFlags flags;
};

int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  const Problem pb = load_problem(a.config, a.demand, a.scenario);
  meta::SolverConfig sc;
  meta::AnnealSchedule as;
  sc.rng_seed = a.seed;
  a.flags.apply(sc, as);

  const meta::SolveResult result =
      meta::solve(pb.demand, pb.fleet, pb.config.costs, sc, as, !a.no_greedy_seed);
  const auto violations = model::validate(result.schedule, pb.demand, pb.fleet, pb.config.costs);

  const fs::path dir(a.out_dir);
  ensure_dir(dir);
  write_text_file(dir / "schedule.csv", model::format_schedule_csv(result.schedule));
  write_text_file(dir / "trace.csv", meta::format_trace_csv(result.trace));
  if (result.greedy) write_text_file(dir / "greedy_trace.csv", greedy::format_trace_csv(*result.greedy));

  Manifest m("solve");
  m.set("config_path", a.config);
  m.set("demand_path", a.demand);
  m.set("rng_seed", std::to_string(a.seed));
  m.set("output_dir", a.out_dir);
  m.set("scenario", a.scenario);
  m.set("greedy_seed", a.no_greedy_seed ? "false" : "true");
  a.flags.record(m, sc, as);
  m.set("tool_version", VESSELPLAN_VERSION);
  m.set("wall_ms", std::to_string(a.timing ? elapsed_ms(start) : 0));
  write_text_file(dir / "manifest.txt", m.format());

  if (!violations.empty()) {
    for (const auto& v : violations) {
      err << "week " << v.week << ' ' << model::constraint_name(v.constraint) << ' ' << v.detail << '\n';
    }
    return kValidation;
  }
  out << "total_cost=" << result.schedule.total_cost.to_string() << '\n';
  out << "iterations_to_best=" << result.iterations_to_best << '\n';
  return kOk;
}

// --- validate --------------------------------------------------------------

struct ValidateArgs {
  std::string schedule;
  std::string demand;
  std::string config;
  std::string scenario = "base";
};

int cmd_validate(const ValidateArgs& a, std::ostream& out) {
  const Problem pb = load_problem(a.config, a.demand, a.scenario);
  const std::string text = read_text_file(a.schedule);
  const bool blank = std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); });
  const model::Schedule schedule = blank ? model::Schedule{} : model::parse_schedule_csv(text);

  const auto violations = model::validate(schedule, pb.demand, pb.fleet, pb.config.costs);
  if (violations.empty()) {
    out << "OK\n";
    return kOk;
  }
  for (const auto& v : violations) {
    out << "week " << v.week << ' ' << model::constraint_name(v.constraint) << ' ' << v.detail << '\n';
  }
  return kValidation;
}

// --- forecast --------------------------------------------------------------

struct ForecastArgs {
  std::string demand;
  std::string order;
  int horizon = 0;
  double lambda = 0.98;
  int max_lag = 20;
  std::string out_dir;
  bool timing = false;
};

int cmd_forecast(const ForecastArgs& a, std::ostream& out) {
  namespace fc = vesselplan::forecast;
  const auto start = Clock::now();
  const fc::ArimaOrder order = fc::ArimaOrder::parse(a.order);
  const DemandSeries demand = load_demand_csv(a.demand);
  const std::vector<double> y(demand.values().begin(), demand.values().end());

  const fc::FitResult fit = fc::rls_fit(y, order, a.lambda);
  const DemandSeries extension = fc::forecast_demand(demand, order, a.lambda, a.horizon);

  const int params = order.p + order.q;
  if (a.max_lag <= params) {
    throw fc::ForecastError(fc::ForecastError::Code::InvalidArgument,
                            "--max-lag must exceed p + q = " + std::to_string(params));
  }
  const std::vector<double> r = fc::acf(fit.residuals, a.max_lag);
  const std::vector<double> pr = fc::pacf(fit.residuals, a.max_lag);
  const fc::WhitenessResult white = fc::whiteness_check(fit.residuals, a.max_lag, params);

  std::optional<double> r2;
  try {
    r2 = fc::r_squared(fc::fitted_values(fit.model, y), y);
  } catch (const fc::ForecastError& e) {
    if (e.code() != fc::ForecastError::Code::Degenerate) throw;
  }
  const std::string r2_text = r2 ? fmt(*r2) : "NA";

  std::ostringstream series;
  series << "week,demand,source\n";
  for (int w = 0; w < demand.horizon(); ++w) series << w + 1 << ',' << demand[static_cast<std::size_t>(w)] << ",observed\n";
  for (int k = 0; k < extension.horizon(); ++k) {
    series << demand.horizon() + k + 1 << ',' << extension[static_cast<std::size_t>(k)] << ",forecast\n";
  }

  std::ostringstream diag;
  diag << "lag,acf,pacf\n";
  for (std::size_t k = 0; k < r.size(); ++k) diag << k << ',' << fmt(r[k]) << ',' << fmt(pr[k]) << '\n';

  std::ostringstream summary;
  summary << "Q,df,pass,r_squared\n"
          << fmt(white.statistic) << ',' << white.degrees_of_freedom << ','
          << (white.pass ? "true" : "false") << ',' << r2_text << '\n';

  const fs::path dir(a.out_dir);
  ensure_dir(dir);
  write_text_file(dir / "forecast.csv", series.str());
  write_text_file(dir / "diagnostics.csv", diag.str());
  write_text_file(dir / "diagnostics_summary.csv", summary.str());

  Manifest m("forecast");
  m.set("demand_path", a.demand);
  m.set("order", a.order);
  m.set("horizon", std::to_string(a.horizon));
  m.set("lambda", fmt(a.lambda));
  m.set("max_lag", std::to_string(a.max_lag));
  m.set("rng_seed", "none");
  m.set("output_dir", a.out_dir);
  m.set("tool_version", VESSELPLAN_VERSION);
  m.set("wall_ms", std::to_string(a.timing ? elapsed_ms(start) : 0));
  write_text_file(dir / "manifest.txt", m.format());

  out << "Q=" << fmt(white.statistic) << " df=" << white.degrees_of_freedom
      << " pass=" << (white.pass ? "true" : "false") << '\n';
  out << "R2=" << r2_text << '\n';
  return kOk;
}

// --- bench -----------------------------------------------------------------

struct BenchArgs {
  std::string config;
  std::string demand;
  int seeds = 1;
  std::string out;
  std::string scenario = "base";
  bool timing = false;
  SolverFlags flags;
};

struct BenchRow {
  std::string method;
  std::uint64_t seed;
  Money best_cost;
  std::int64_t iterations_to_best;
  std::int64_t wall_ms;
};

template <typename T>
double median(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  if (n % 2 == 1) return static_cast<double>(v[n / 2]);
  return (static_cast<double>(v[n / 2 - 1]) + static_cast<double>(v[n / 2])) / 2.0;
}

int cmd_bench(const BenchArgs& a, std::ostream& out) {
  const auto start = Clock::now();
  const Problem pb = load_problem(a.config, a.demand, a.scenario);
  meta::SolverConfig base;
  meta::AnnealSchedule as;
  base.max_iterations = 20'000;
  a.flags.apply(base, as);

  std::vector<BenchRow> rows;
  for (const std::string method : {"hybrid", "plain_ga"}) {
    for (int s = 1; s <= a.seeds; ++s) {
      meta::SolverConfig sc = base;
      sc.rng_seed = static_cast<std::uint64_t>(s);
      const auto t0 = Clock::now();
      const meta::SolveResult r =
          method == "hybrid" ? meta::solve(pb.demand, pb.fleet, pb.config.costs, sc, as, true)
                             : meta::solve_plain_ga(pb.demand, pb.fleet, pb.config.costs, sc, as);
      rows.push_back({method, sc.rng_seed, r.schedule.total_cost, r.iterations_to_best,
                      a.timing ? elapsed_ms(t0) : 0});
    }
  }

  std::ostringstream csv;
  csv << "method,seed,best_cost,iterations_to_best,wall_ms\n";
  for (const auto& r : rows) {
    csv << r.method << ',' << r.seed << ',' << r.best_cost.to_string() << ',' << r.iterations_to_best
        << ',' << r.wall_ms << '\n';
  }
  for (const std::string method : {"hybrid", "plain_ga"}) {
    std::vector<double> cost;
    std::vector<std::int64_t> iters, wall;
    for (const auto& r : rows) {
      if (r.method != method) continue;
      cost.push_back(r.best_cost.to_double());
      iters.push_back(r.iterations_to_best);
      wall.push_back(r.wall_ms);
    }
    const double med_cost = median(cost);
    const double med_iters = median(iters);
    csv << method << ",median," << fmt(med_cost) << ',' << fmt(med_iters) << ',' << fmt(median(wall))
        << '\n';
    out << method << " median_best_cost=" << fmt(med_cost) << " median_iterations_to_best="
        << fmt(med_iters) << '\n';
  }

  const fs::path path(a.out);
  ensure_parent(path);
  write_text_file(path, csv.str());

  Manifest m("bench");
  m.set("config_path", a.config);
  m.set("demand_path", a.demand);
  m.set("rng_seed", "1.." + std::to_string(a.seeds));
  m.set("output_dir", path.has_parent_path() ? path.parent_path().string() : ".");
  m.set("scenario", a.scenario);
  a.flags.record(m, base, as);
  m.set("tool_version", VESSELPLAN_VERSION);
  m.set("wall_ms", std::to_string(a.timing ? elapsed_ms(start) : 0));
  fs::path manifest_path = path;
  manifest_path.replace_extension(".manifest.txt");
  write_text_file(manifest_path, m.format());
  return kOk;
}

void print_usage(const CLI::App& app, std::ostream& err) {
  const auto subs = app.get_subcommands();
  err << (subs.empty() ? app.help() : subs.front()->help());
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fleet procurement scheduling and demand forecasting"};
  app.require_subcommand(1);
  app.set_version_flag("--version", VESSELPLAN_VERSION);
  const auto scenarios = CLI::IsMember({"base", "k20", "k10g20"});

  GenDemandArgs gen;
  auto* gen_cmd = app.add_subcommand("gen-demand", "Generate a synthetic demand series");
  gen_cmd->add_option("--horizon", gen.horizon, "Weeks")->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--seed", gen.seed, "RNG seed")->required();
  gen_cmd->add_option("--level", gen.level, "Mean demand level")->capture_default_str();
  gen_cmd->add_option("--volatility", gen.volatility, "Relative step size")->capture_default_str();
  gen_cmd->add_option("--out", gen.out, "Output CSV")->required();

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Compute a minimum-cost procurement schedule");
  solve_cmd->add_option("--config", solve.config, "Problem config")->required();
  solve_cmd->add_option("--demand", solve.demand, "Demand CSV")->required();
  solve_cmd->add_option("--seed", solve.seed, "RNG seed")->required();
  solve_cmd->add_option("--out-dir", solve.out_dir, "Output directory")->required();
  solve_cmd->add_option("--scenario", solve.scenario, "base, k20 or k10g20")->check(scenarios)->capture_default_str();
  solve_cmd->add_flag("--no-greedy-seed", solve.no_greedy_seed, "Start from a random population");
  solve_cmd->add_flag("--timing", solve.timing, "Record wall time in the manifest");
  solve.flags.add_to(solve_cmd);

  ValidateArgs validate;
  auto* validate_cmd = app.add_subcommand("validate", "Check a schedule against the constraints");
  validate_cmd->add_option("--schedule", validate.schedule, "Schedule CSV")->required();
  validate_cmd->add_option("--demand", validate.demand, "Demand CSV")->required();
  validate_cmd->add_option("--config", validate.config, "Problem config")->required();
  validate_cmd->add_option("--scenario", validate.scenario, "base, k20 or k10g20")->check(scenarios)->capture_default_str();

  ForecastArgs forecast;
  auto* forecast_cmd = app.add_subcommand("forecast", "Extend a demand series with ARIMA forecasts");
  forecast_cmd->add_option("--demand", forecast.demand, "Demand CSV")->required();
  forecast_cmd->add_option("--order", forecast.order, "p,d,q")->required();
  forecast_cmd->add_option("--horizon", forecast.horizon, "Weeks to forecast")->required()->check(CLI::PositiveNumber);
  forecast_cmd->add_option("--lambda", forecast.lambda, "Forgetting factor in (0.9, 1]")->capture_default_str();
  forecast_cmd->add_option("--max-lag", forecast.max_lag, "Lags for diagnostics")->capture_default_str();
  forecast_cmd->add_option("--out-dir", forecast.out_dir, "Output directory")->required();
  forecast_cmd->add_flag("--timing", forecast.timing, "Record wall time in the manifest");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Compare the hybrid solver with a plain GA");
  bench_cmd->add_option("--config", bench.config, "Problem config")->required();
  bench_cmd->add_option("--demand", bench.demand, "Demand CSV")->required();
  bench_cmd->add_option("--seeds", bench.seeds, "Seeds 1..n per method")->required()->check(CLI::PositiveNumber);
  bench_cmd->add_option("--out", bench.out, "Output CSV")->required();
  bench_cmd->add_option("--scenario", bench.scenario, "base, k20 or k10g20")->check(scenarios)->capture_default_str();
  bench_cmd->add_flag("--timing", bench.timing, "Record wall times");
  bench.flags.add_to(bench_cmd);

  std::vector<std::string> argv_store{"vesselplan"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    print_usage(app, err);
    return kUsage;
  }

  try {
    if (gen_cmd->parsed()) return cmd_gen_demand(gen);
    if (solve_cmd->parsed()) return cmd_solve(solve, out, err);
    if (validate_cmd->parsed()) return cmd_validate(validate, out);
    if (forecast_cmd->parsed()) return cmd_forecast(forecast, out);
    if (bench_cmd->parsed()) return cmd_bench(bench, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const InfeasibleError& e) {
    err << "error: " << e.what() << '\n';
    return kInfeasible;
  } catch (const forecast::ForecastError& e) {
    err << "error: " << e.what() << '\n';
    switch (e.code()) {
      case forecast::ForecastError::Code::NumericalBreakdown:
      case forecast::ForecastError::Code::NoninvertibleMa:
        return kNumerical;
      default:
        return kUsage;
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  }
  err << app.help();
  return kUsage;
}

}  // namespace vesselplan::cli
