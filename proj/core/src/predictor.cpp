#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "polynomial.hpp"
#include "vesselplan/forecast.hpp"

namespace vesselplan::forecast {

namespace {

// mu * C(t + d - 1, d): the deterministic part whose d-th difference is mu.
double trend(double mu, int d, std::size_t t) {
  double b = 1.0;
  for (int i = 1; i <= d; ++i) b = b * static_cast<double>(t - 1 + static_cast<std::size_t>(i)) / i;
  return mu * b;
}

struct Levels {
  std::vector<double> z;
  double pad = 0.0;

  double at(std::ptrdiff_t t) const { return t < 0 ? pad : z[static_cast<std::size_t>(t)]; }
};

Levels detrend(const ArimaModel& model, std::span<const double> history) {
  Levels out;
  out.z.resize(history.size());
  for (std::size_t t = 0; t < history.size(); ++t) {
    out.z[t] = history[t] - trend(model.series_mean, model.order.d, t + 1);
  }
  out.pad = model.order.d >= 1 ? out.z.front() : 0.0;
  return out;
}

void check_inputs(const ArimaModel& model, std::span<const double> history, int k) {
  if (k < 1) throw ForecastError(ForecastError::Code::InvalidArgument, "k must be >= 1");
  const auto need =
      std::max<std::size_t>(1, static_cast<std::size_t>(model.order.p + model.order.d + model.order.q));
  if (history.size() < need) {
    throw ForecastError(ForecastError::Code::SeriesTooShort,
                        "history needs at least " + std::to_string(need) + " values");
  }
  if (!ma_invertible(model)) {
    throw ForecastError(ForecastError::Code::NoninvertibleMa,
                        "C(B) has a root on or inside the unit circle");
  }
}

// e(t) from A(B)(1-B)^d z(t) = C(B) e(t), zero presample shocks.
std::vector<double> shocks(const Levels& lv, const detail::Poly& a, const detail::Poly& c) {
  std::vector<double> e(lv.z.size(), 0.0);
  for (std::size_t t = 0; t < lv.z.size(); ++t) {
    const auto ti = static_cast<std::ptrdiff_t>(t);
    double v = lv.z[t];
    for (std::size_t i = 1; i < a.size(); ++i) v += a[i] * lv.at(ti - static_cast<std::ptrdiff_t>(i));
    for (std::size_t j = 1; j < c.size() && j <= t; ++j) v -= c[j] * e[t - j];
    e[t] = v;
  }
  return e;
}

}  // namespace

AstromPredictor AstromPredictor::design(const ArimaModel& model, int k) {
  if (k < 1) throw ForecastError(ForecastError::Code::InvalidArgument, "k must be >= 1");
  const detail::Poly a = model.integrated_ar_poly();
  const detail::Poly c = model.ma_poly();
  const auto ku = static_cast<std::size_t>(k);

  AstromPredictor out;
  out.horizon = k;
  out.f_poly.assign(ku, 0.0);
  for (std::size_t j = 0; j < ku; ++j) {
    double v = j < c.size() ? c[j] : 0.0;
    for (std::size_t i = 1; i < a.size() && i <= j; ++i) v -= a[i] * out.f_poly[j - i];
    out.f_poly[j] = v;
  }

  detail::Poly rest = detail::multiply(a, out.f_poly);
  rest.resize(std::max(rest.size(), c.size()), 0.0);
  for (std::size_t j = 0; j < rest.size(); ++j) rest[j] = (j < c.size() ? c[j] : 0.0) - rest[j];
  if (rest.size() > ku) {
    out.g_poly.assign(rest.begin() + static_cast<std::ptrdiff_t>(ku), rest.end());
  } else {
    out.g_poly.assign(1, 0.0);
  }
  return out;
}

double AstromPredictor::identity_error(const ArimaModel& model) const {
  const detail::Poly a = model.integrated_ar_poly();
  const detail::Poly c = model.ma_poly();
  detail::Poly rhs = detail::multiply(a, f_poly);
  const auto ku = static_cast<std::size_t>(horizon);
  rhs.resize(std::max({rhs.size(), c.size(), g_poly.size() + ku}), 0.0);
  for (std::size_t j = 0; j < g_poly.size(); ++j) rhs[j + ku] += g_poly[j];
  double worst = 0.0;
  for (std::size_t j = 0; j < rhs.size(); ++j) {
    worst = std::max(worst, std::abs((j < c.size() ? c[j] : 0.0) - rhs[j]));
  }
  return worst;
}

double astrom_predict(const ArimaModel& model, std::span<const double> history, int k) {
  check_inputs(model, history, k);
  const AstromPredictor pred = AstromPredictor::design(model, k);
  const detail::Poly c = model.ma_poly();
  const Levels lv = detrend(model, history);

  // C(B) yhat(t) = G(B) z(t); before the sample yhat sits at the padding level.
  std::vector<double> yhat(lv.z.size(), 0.0);
  auto yhat_at = [&](std::ptrdiff_t t) { return t < 0 ? lv.pad : yhat[static_cast<std::size_t>(t)]; };
  for (std::size_t t = 0; t < lv.z.size(); ++t) {
    const auto ti = static_cast<std::ptrdiff_t>(t);
    double v = 0.0;
    for (std::size_t j = 0; j < pred.g_poly.size(); ++j) {
      v += pred.g_poly[j] * lv.at(ti - static_cast<std::ptrdiff_t>(j));
    }
    for (std::size_t i = 1; i < c.size(); ++i) v -= c[i] * yhat_at(ti - static_cast<std::ptrdiff_t>(i));
    yhat[t] = v;
  }
  return yhat.back() + trend(model.series_mean, model.order.d, history.size() + static_cast<std::size_t>(k));
}

double conditional_expectation_predict(const ArimaModel& model, std::span<const double> history,
                                       int k) {
  check_inputs(model, history, k);
  const detail::Poly a = model.integrated_ar_poly();
  const detail::Poly c = model.ma_poly();
  Levels lv = detrend(model, history);
  const std::vector<double> e = shocks(lv, a, c);
  const std::size_t n = lv.z.size();

  for (std::size_t s = n; s < n + static_cast<std::size_t>(k); ++s) {
    const auto si = static_cast<std::ptrdiff_t>(s);
    double v = 0.0;
    for (std::size_t i = 1; i < a.size(); ++i) v -= a[i] * lv.at(si - static_cast<std::ptrdiff_t>(i));
    for (std::size_t j = 1; j < c.size(); ++j) {
      if (s >= j && s - j < n) v += c[j] * e[s - j];
    }
    lv.z.push_back(v);
  }
  return lv.z.back() + trend(model.series_mean, model.order.d, n + static_cast<std::size_t>(k));
}

std::vector<double> fitted_values(const ArimaModel& model, std::span<const double> series) {
  if (series.empty()) throw ForecastError(ForecastError::Code::SeriesTooShort, "empty series");
  const Levels lv = detrend(model, series);
  const std::vector<double> e = shocks(lv, model.integrated_ar_poly(), model.ma_poly());
  std::vector<double> out(series.size());
  for (std::size_t t = 0; t < series.size(); ++t) out[t] = series[t] - e[t];
  return out;
}

DemandSeries forecast_demand(const DemandSeries& series, ArimaOrder order, double lambda,
                             int horizon) {
  if (horizon < 1) throw ForecastError(ForecastError::Code::InvalidArgument, "horizon must be >= 1");
  const std::vector<double> y(series.values().begin(), series.values().end());
  const FitResult fit = rls_fit(y, order, lambda);
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(horizon));
  for (int k = 1; k <= horizon; ++k) {
    const double v = astrom_predict(fit.model, y, k);
    if (!std::isfinite(v) || v > static_cast<double>(std::numeric_limits<int>::max() / 2)) {
      throw ForecastError(ForecastError::Code::NumericalBreakdown,
                          "forecast at step " + std::to_string(k) + " is out of range");
    }
    out.push_back(std::max(0, round_half_up(v)));
  }
  return DemandSeries(std::move(out));
}

}  // namespace vesselplan::forecast
