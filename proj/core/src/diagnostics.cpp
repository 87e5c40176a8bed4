#include <array>
#include <cmath>
#include <numeric>
#include <string>

#include "vesselplan/forecast.hpp"

namespace vesselplan::forecast {

namespace {

constexpr std::array<double, 100> kChiSquare95 = {
    3.8415,   5.9915,   7.8147,   9.4877,   11.0705,  12.5916,  14.0671,  15.5073,  16.9190,
    18.3070,  19.6751,  21.0261,  22.3620,  23.6848,  24.9958,  26.2962,  27.5871,  28.8693,
    30.1435,  31.4104,  32.6706,  33.9244,  35.1725,  36.4150,  37.6525,  38.8851,  40.1133,
    41.3371,  42.5570,  43.7730,  44.9853,  46.1943,  47.3999,  48.6024,  49.8018,  50.9985,
    52.1923,  53.3835,  54.5722,  55.7585,  56.9424,  58.1240,  59.3035,  60.4809,  61.6562,
    62.8296,  64.0011,  65.1708,  66.3386,  67.5048,  68.6693,  69.8322,  70.9935,  72.1532,
    73.3115,  74.4683,  75.6237,  76.7778,  77.9305,  79.0819,  80.2321,  81.3810,  82.5287,
    83.6753,  84.8206,  85.9649,  87.1081,  88.2502,  89.3912,  90.5312,  91.6702,  92.8083,
    93.9453,  95.0815,  96.2167,  97.3510,  98.4844,  99.6169,  100.7486, 101.8795, 103.0095,
    104.1387, 105.2672, 106.3948, 107.5217, 108.6479, 109.7733, 110.8980, 112.0220, 113.1453,
    114.2679, 115.3898, 116.5110, 117.6317, 118.7516, 119.8709, 120.9896, 122.1077, 123.2252,
    124.3421,
};

}  // namespace

std::vector<double> acf(std::span<const double> series, int max_lag) {
  if (max_lag < 0) throw ForecastError(ForecastError::Code::InvalidArgument, "max_lag < 0");
  const auto n = series.size();
  if (n <= static_cast<std::size_t>(max_lag)) {
    throw ForecastError(ForecastError::Code::SeriesTooShort,
                        "need more than " + std::to_string(max_lag) + " values");
  }
  const double mean = std::accumulate(series.begin(), series.end(), 0.0) / static_cast<double>(n);
  double c0 = 0.0;
  for (double v : series) c0 += (v - mean) * (v - mean);

  std::vector<double> out(static_cast<std::size_t>(max_lag) + 1, 0.0);
  out[0] = 1.0;
  if (c0 == 0.0) return out;
  for (std::size_t k = 1; k < out.size(); ++k) {
    double ck = 0.0;
    for (std::size_t t = k; t < n; ++t) ck += (series[t] - mean) * (series[t - k] - mean);
    out[k] = ck / c0;
  }
  return out;
}

std::vector<double> pacf(std::span<const double> series, int max_lag) {
  const std::vector<double> r = acf(series, max_lag);
  std::vector<double> out(r.size(), 0.0);
  out[0] = 1.0;
  std::vector<double> phi, prev;
  for (std::size_t k = 1; k < r.size(); ++k) {
    double num = r[k];
    double den = 1.0;
    for (std::size_t j = 1; j < k; ++j) {
      num -= prev[j - 1] * r[k - j];
      den -= prev[j - 1] * r[j];
    }
    const double kk = den == 0.0 ? 0.0 : num / den;
    phi.assign(k, 0.0);
    for (std::size_t j = 1; j < k; ++j) phi[j - 1] = prev[j - 1] - kk * prev[k - j - 1];
    phi[k - 1] = kk;
    out[k] = kk;
    prev = phi;
  }
  return out;
}

double chi_square_critical_95(int df) {
  if (df < 1) throw ForecastError(ForecastError::Code::InvalidArgument, "df must be >= 1");
  if (df <= 100) return kChiSquare95[static_cast<std::size_t>(df - 1)];
  // Wilson-Hilferty.
  const double z = 1.6448536269514722;
  const double h = 2.0 / (9.0 * df);
  const double base = 1.0 - h + z * std::sqrt(h);
  return df * base * base * base;
}

WhitenessResult whiteness_check(std::span<const double> residuals, int max_lag,
                                int fitted_params) {
  if (max_lag < 1) throw ForecastError(ForecastError::Code::InvalidArgument, "max_lag must be >= 1");
  const int df = max_lag - fitted_params;
  if (df < 1) {
    throw ForecastError(ForecastError::Code::InvalidArgument,
                        "max_lag must exceed the number of fitted parameters");
  }
  const std::vector<double> r = acf(residuals, max_lag);
  const auto n = static_cast<double>(residuals.size());
  double sum = 0.0;
  for (std::size_t k = 1; k < r.size(); ++k) sum += r[k] * r[k] / (n - static_cast<double>(k));

  WhitenessResult out;
  out.statistic = n * (n + 2.0) * sum;
  out.degrees_of_freedom = df;
  out.critical_value = chi_square_critical_95(df);
  out.pass = out.statistic < out.critical_value;
  return out;
}

double r_squared(std::span<const double> fitted, std::span<const double> actual) {
  if (fitted.size() != actual.size()) {
    throw ForecastError(ForecastError::Code::LengthMismatch, "fitted and actual lengths differ");
  }
  if (actual.size() < 2) throw ForecastError(ForecastError::Code::SeriesTooShort, "need >= 2 values");
  const double mean =
      std::accumulate(actual.begin(), actual.end(), 0.0) / static_cast<double>(actual.size());
  double ss_tot = 0.0, ss_res = 0.0;
  for (std::size_t i = 0; i < actual.size(); ++i) {
    ss_tot += (actual[i] - mean) * (actual[i] - mean);
    ss_res += (actual[i] - fitted[i]) * (actual[i] - fitted[i]);
  }
  if (ss_tot == 0.0) throw ForecastError(ForecastError::Code::Degenerate, "actual series is constant");
  return 1.0 - ss_res / ss_tot;
}

}  // namespace vesselplan::forecast
