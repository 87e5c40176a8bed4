#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "vesselplan/domain.hpp"
#include "vesselplan/errors.hpp"

namespace vesselplan {

namespace {

constexpr std::array<std::string_view, 10> kConfigKeys = {
    "vessel_price",      "operator_price",  "training_price",  "operator_maint_price",
    "vessel_maint_price", "instruct_capacity", "attrition_rate", "initial_vessels",
    "initial_operators", "horizon",
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

int parse_int(std::string_view key, std::string_view value) {
  int out = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size())
    throw ConfigError(std::string(key), "expected an integer, got '" + std::string(value) + "'");
  return out;
}

double parse_double(std::string_view key, std::string_view value) {
  double out = 0.0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size())
    throw ConfigError(std::string(key), "expected a number, got '" + std::string(value) + "'");
  return out;
}

Money parse_money(std::string_view key, std::string_view value) {
  try {
    return Money::parse(value);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string(key), e.what());
  }
}

std::string format_double(double v) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

}  // namespace

ProblemConfig parse_config(std::string_view text) {
  std::map<std::string, std::string, std::less<>> entries;
  int line_no = 0;
  for (std::string_view raw : split_lines(text)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("line " + std::to_string(line_no), "expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (std::find(kConfigKeys.begin(), kConfigKeys.end(), key) == kConfigKeys.end())
      throw ConfigError(key, "unknown key");
    if (value.empty()) throw ConfigError(key, "missing value");
    if (!entries.emplace(key, value).second) throw ConfigError(key, "duplicate key");
  }
  for (auto key : kConfigKeys) {
    if (entries.find(key) == entries.end()) throw ConfigError(std::string(key), "missing key");
  }
  auto get = [&](std::string_view key) -> std::string_view { return entries.find(key)->second; };

  CostParams costs(parse_money("vessel_price", get("vessel_price")),
                   parse_money("operator_price", get("operator_price")),
                   parse_money("training_price", get("training_price")),
                   parse_money("operator_maint_price", get("operator_maint_price")),
                   parse_money("vessel_maint_price", get("vessel_maint_price")));
  FleetParams fleet(parse_int("instruct_capacity", get("instruct_capacity")),
                    parse_double("attrition_rate", get("attrition_rate")),
                    parse_int("initial_vessels", get("initial_vessels")),
                    parse_int("initial_operators", get("initial_operators")),
                    parse_int("horizon", get("horizon")));
  return ProblemConfig{costs, fleet};
}

ProblemConfig load_config(const std::filesystem::path& path) {
  return parse_config(read_text_file(path));
}

std::string format_config(const ProblemConfig& config) {
  const auto& c = config.costs;
  const auto& f = config.fleet;
  std::ostringstream out;
  out << "vessel_price = " << c.vessel_price().to_string() << '\n'
      << "operator_price = " << c.operator_price().to_string() << '\n'
      << "training_price = " << c.training_price().to_string() << '\n'
      << "operator_maint_price = " << c.operator_maint_price().to_string() << '\n'
      << "vessel_maint_price = " << c.vessel_maint_price().to_string() << '\n'
      << "instruct_capacity = " << f.instruct_capacity() << '\n'
      << "attrition_rate = " << format_double(f.attrition_rate()) << '\n'
      << "initial_vessels = " << f.initial_vessels() << '\n'
      << "initial_operators = " << f.initial_operators() << '\n'
      << "horizon = " << f.horizon() << '\n';
  return out.str();
}

DemandSeries parse_demand_csv(std::string_view text) {
  const auto lines = split_lines(text);
  std::size_t i = 0;
  while (i < lines.size() && trim(lines[i]).empty()) ++i;
  if (i == lines.size() || trim(lines[i]) != "week,demand")
    throw FormatError("demand CSV must start with header 'week,demand'");
  std::vector<int> values;
  for (++i; i < lines.size(); ++i) {
    const auto line = trim(lines[i]);
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string_view::npos)
      throw FormatError("demand CSV row " + std::to_string(values.size() + 1) + ": expected 2 fields");
    int week = 0;
    int demand = 0;
    try {
      week = parse_int("week", trim(line.substr(0, comma)));
      demand = parse_int("demand", trim(line.substr(comma + 1)));
    } catch (const ConfigError& e) {
      throw FormatError(std::string("demand CSV: ") + e.what());
    }
    if (week != static_cast<int>(values.size()) + 1)
      throw FormatError("demand CSV weeks must be contiguous from 1; got week " +
                        std::to_string(week) + " at row " + std::to_string(values.size() + 1));
    if (demand < 0) throw FormatError("demand CSV week " + std::to_string(week) + " is negative");
    values.push_back(demand);
  }
  return DemandSeries(std::move(values));
}

DemandSeries load_demand_csv(const std::filesystem::path& path) {
  return parse_demand_csv(read_text_file(path));
}

std::string format_demand_csv(const DemandSeries& demand) {
  std::string out = "week,demand\n";
  for (int w = 0; w < demand.horizon(); ++w) {
    out += std::to_string(w + 1);
    out += ',';
    out += std::to_string(demand[static_cast<std::size_t>(w)]);
    out += '\n';
  }
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("failed reading " + path.string());
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace vesselplan
