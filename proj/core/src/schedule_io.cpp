#include <charconv>
#include <sstream>

#include "vesselplan/errors.hpp"
#include "vesselplan/model.hpp"

namespace vesselplan::model {

namespace {

constexpr std::string_view kHeader =
    "week,vessel_buys,operator_buys,vessel_discards,operator_discards,vessels_destroyed,"
    "operators_destroyed,vessels_maint,operators_maint,instructors,trainees,robots_deployed,"
    "week_cost";

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    parts.push_back(line.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

int to_int(std::string_view s, int row) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw FormatError("schedule CSV row " + std::to_string(row) + ": bad integer '" +
                      std::string(s) + "'");
  return v;
}

void append_row(std::ostringstream& out, const std::string& label, const WeekRecord& r) {
  out << label << ',' << r.vessel_buys << ',' << r.operator_buys << ',' << r.vessel_discards << ','
      << r.operator_discards << ',' << r.vessels_destroyed << ',' << r.operators_destroyed << ','
      << r.vessels_maint << ',' << r.operators_maint << ',' << r.instructors << ',' << r.trainees
      << ',' << r.robots_deployed << ',' << r.week_cost.to_string() << '\n';
}

}  // namespace

std::string format_schedule_csv(const Schedule& schedule) {
  std::ostringstream out;
  out << kHeader << '\n';
  WeekRecord sum;
  for (const auto& r : schedule.weeks) {
    append_row(out, std::to_string(r.week), r);
    sum.vessel_buys += r.vessel_buys;
    sum.operator_buys += r.operator_buys;
    sum.vessel_discards += r.vessel_discards;
    sum.operator_discards += r.operator_discards;
    sum.vessels_destroyed += r.vessels_destroyed;
    sum.operators_destroyed += r.operators_destroyed;
    sum.vessels_maint += r.vessels_maint;
    sum.operators_maint += r.operators_maint;
    sum.instructors += r.instructors;
    sum.trainees += r.trainees;
    sum.robots_deployed += r.robots_deployed;
  }
  sum.week_cost = schedule.total_cost;
  append_row(out, "total", sum);
  return out.str();
}

Schedule parse_schedule_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line)) throw FormatError("schedule CSV is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kHeader) throw FormatError("schedule CSV header mismatch");

  Schedule schedule;
  bool saw_total = false;
  int row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (saw_total) throw FormatError("schedule CSV has rows after the total row");
    const auto f = split(line, ',');
    if (f.size() != 13)
      throw FormatError("schedule CSV row " + std::to_string(row) + ": expected 13 fields");
    Money cost;
    try {
      cost = Money::parse(f[12]);
    } catch (const std::invalid_argument& e) {
      throw FormatError("schedule CSV row " + std::to_string(row) + ": " + e.what());
    }
    if (f[0] == "total") {
      saw_total = true;
      schedule.total_cost = cost;
      continue;
    }
    WeekRecord r;
    r.week = to_int(f[0], row);
    r.vessel_buys = to_int(f[1], row);
    r.operator_buys = to_int(f[2], row);
    r.vessel_discards = to_int(f[3], row);
    r.operator_discards = to_int(f[4], row);
    r.vessels_destroyed = to_int(f[5], row);
    r.operators_destroyed = to_int(f[6], row);
    r.vessels_maint = to_int(f[7], row);
    r.operators_maint = to_int(f[8], row);
    r.instructors = to_int(f[9], row);
    r.trainees = to_int(f[10], row);
    r.robots_deployed = to_int(f[11], row);
    r.week_cost = cost;
    schedule.weeks.push_back(r);
  }
  if (!saw_total) {
    for (const auto& r : schedule.weeks) schedule.total_cost += r.week_cost;
  }
  return schedule;
}

}  // namespace vesselplan::model
