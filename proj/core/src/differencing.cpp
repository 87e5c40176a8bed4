#include <string>

#include "vesselplan/forecast.hpp"

namespace vesselplan::forecast {

Differenced difference(std::span<const double> series, int d) {
  if (d < 0) throw ForecastError(ForecastError::Code::InvalidArgument, "negative d");
  if (series.size() <= static_cast<std::size_t>(d)) {
    throw ForecastError(ForecastError::Code::SeriesTooShort,
                        "need more than " + std::to_string(d) + " values, got " +
                            std::to_string(series.size()));
  }
  Differenced out;
  out.values.assign(series.begin(), series.end());
  out.initial.reserve(static_cast<std::size_t>(d));
  for (int level = 0; level < d; ++level) {
    out.initial.push_back(out.values.front());
    for (std::size_t i = 0; i + 1 < out.values.size(); ++i) {
      out.values[i] = out.values[i + 1] - out.values[i];
    }
    out.values.pop_back();
  }
  return out;
}

std::vector<double> integrate(std::span<const double> differenced, std::span<const double> initial,
                              int d) {
  if (d < 0) throw ForecastError(ForecastError::Code::InvalidArgument, "negative d");
  if (initial.size() != static_cast<std::size_t>(d)) {
    throw ForecastError(ForecastError::Code::LengthMismatch,
                        "expected " + std::to_string(d) + " initial values, got " +
                            std::to_string(initial.size()));
  }
  std::vector<double> current(differenced.begin(), differenced.end());
  for (int level = d - 1; level >= 0; --level) {
    std::vector<double> next;
    next.reserve(current.size() + 1);
    next.push_back(initial[static_cast<std::size_t>(level)]);
    for (double step : current) next.push_back(next.back() + step);
    current = std::move(next);
  }
  return current;
}

}  // namespace vesselplan::forecast
