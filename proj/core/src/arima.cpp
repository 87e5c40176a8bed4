#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <string>

#include "polynomial.hpp"
#include "vesselplan/forecast.hpp"

namespace vesselplan::forecast {

namespace detail {

Poly multiply(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Poly difference_poly(int d) {
  Poly out{1.0};
  for (int i = 0; i < d; ++i) out = multiply(out, Poly{1.0, -1.0});
  return out;
}

std::vector<std::complex<double>> roots(const Poly& p) {
  std::size_t degree = p.size();
  while (degree > 0 && p[degree - 1] == 0.0) --degree;
  if (degree <= 1) return {};
  const auto m = static_cast<Eigen::Index>(degree - 1);
  // Companion matrix of the monic polynomial p / p[m].
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(m, m);
  for (Eigen::Index i = 1; i < m; ++i) companion(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < m; ++i) {
    companion(i, m - 1) = -p[static_cast<std::size_t>(i)] / p[static_cast<std::size_t>(m)];
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  if (solver.info() != Eigen::Success) {
    throw ForecastError(ForecastError::Code::NumericalBreakdown, "root finding failed");
  }
  const Eigen::VectorXcd ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

Poly from_roots(double c0, const std::vector<std::complex<double>>& r) {
  std::vector<std::complex<double>> acc{c0};
  for (const auto& root : r) {
    std::vector<std::complex<double>> next(acc.size() + 1, 0.0);
    for (std::size_t i = 0; i < acc.size(); ++i) {
      next[i] += acc[i];
      next[i + 1] -= acc[i] / root;
    }
    acc = std::move(next);
  }
  Poly out(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) out[i] = acc[i].real();
  return out;
}

}  // namespace detail

const char* ForecastError::code_name(Code c) {
  switch (c) {
    case Code::SeriesTooShort: return "SERIES_TOO_SHORT";
    case Code::LengthMismatch: return "LENGTH_MISMATCH";
    case Code::NumericalBreakdown: return "NUMERICAL_BREAKDOWN";
    case Code::NoninvertibleMa: return "NONINVERTIBLE_MA";
    case Code::Degenerate: return "DEGENERATE";
    case Code::InvalidArgument: return "INVALID_ARGUMENT";
  }
  return "UNKNOWN";
}

ArimaOrder::ArimaOrder(int p_, int d_, int q_) : p(p_), d(d_), q(q_) {
  if (p < 0 || d < 0 || q < 0) {
    throw ForecastError(ForecastError::Code::InvalidArgument, "orders must be nonnegative");
  }
  if (p + d + q == 0) {
    throw ForecastError(ForecastError::Code::InvalidArgument, "order (0,0,0) has nothing to fit");
  }
}

ArimaOrder ArimaOrder::parse(const std::string& text) {
  int values[3] = {0, 0, 0};
  const char* cur = text.data();
  const char* end = text.data() + text.size();
  for (int i = 0; i < 3; ++i) {
    auto [ptr, ec] = std::from_chars(cur, end, values[i]);
    if (ec != std::errc() || ptr == cur) {
      throw ForecastError(ForecastError::Code::InvalidArgument, "bad order '" + text + "'");
    }
    cur = ptr;
    if (i < 2) {
      if (cur == end || *cur != ',') {
        throw ForecastError(ForecastError::Code::InvalidArgument, "bad order '" + text + "'");
      }
      ++cur;
    }
  }
  if (cur != end) throw ForecastError(ForecastError::Code::InvalidArgument, "bad order '" + text + "'");
  return ArimaOrder(values[0], values[1], values[2]);
}

ArimaModel::ArimaModel(ArimaOrder order_, std::vector<double> ar, std::vector<double> ma,
                       double mean, double variance)
    : order(order_),
      ar_coeffs(std::move(ar)),
      ma_coeffs(std::move(ma)),
      series_mean(mean),
      noise_variance(variance) {
  if (ar_coeffs.size() != static_cast<std::size_t>(order.p) ||
      ma_coeffs.size() != static_cast<std::size_t>(order.q)) {
    throw ForecastError(ForecastError::Code::LengthMismatch,
                        "coefficient counts do not match the order");
  }
  if (!(noise_variance >= 0.0)) {
    throw ForecastError(ForecastError::Code::InvalidArgument, "noise variance must be >= 0");
  }
}

std::vector<double> ArimaModel::integrated_ar_poly() const {
  detail::Poly a{1.0};
  for (double c : ar_coeffs) a.push_back(-c);
  return detail::multiply(a, detail::difference_poly(order.d));
}

std::vector<double> ArimaModel::ma_poly() const {
  detail::Poly c{1.0};
  c.insert(c.end(), ma_coeffs.begin(), ma_coeffs.end());
  return c;
}

std::vector<double> ma_root_moduli(const ArimaModel& model) {
  std::vector<double> out;
  for (const auto& r : detail::roots(model.ma_poly())) out.push_back(std::abs(r));
  std::sort(out.begin(), out.end());
  return out;
}

bool ma_invertible(const ArimaModel& model) {
  for (double m : ma_root_moduli(model)) {
    if (!(m > 1.0 + 1e-8)) return false;
  }
  return true;
}

namespace {

// Reflects roots of C(B) inside the unit circle to 1/conj(r).
std::vector<double> invertible_ma(const std::vector<double>& ma) {
  detail::Poly c{1.0};
  c.insert(c.end(), ma.begin(), ma.end());
  auto r = detail::roots(c);
  bool flipped = false;
  for (auto& root : r) {
    if (std::abs(root) < 1.0) {
      root = 1.0 / std::conj(root);
      flipped = true;
    }
  }
  if (!flipped) return ma;
  detail::Poly rebuilt = detail::from_roots(1.0, r);
  std::vector<double> out(ma.size(), 0.0);
  for (std::size_t j = 0; j < out.size() && j + 1 < rebuilt.size(); ++j) out[j] = rebuilt[j + 1];
  return out;
}

// Conditional residuals: e(t) = w(t) - sum a_i w(t-i) - sum c_j e(t-j) for
// t >= p, with e = 0 before p.
std::vector<double> filter_residuals(const std::vector<double>& w, const std::vector<double>& ar,
                                     const std::vector<double>& ma) {
  const std::size_t p = ar.size();
  std::vector<double> e(w.size(), 0.0);
  for (std::size_t t = p; t < w.size(); ++t) {
    double v = w[t];
    for (std::size_t i = 1; i <= p; ++i) v -= ar[i - 1] * w[t - i];
    for (std::size_t j = 1; j <= ma.size() && j <= t; ++j) v -= ma[j - 1] * e[t - j];
    e[t] = v;
  }
  e.erase(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(std::min(p, e.size())));
  return e;
}

}  // namespace

FitResult rls_fit(std::span<const double> series, ArimaOrder order, double lambda) {
  if (!(lambda > 0.9 && lambda <= 1.0)) {
    throw ForecastError(ForecastError::Code::InvalidArgument, "lambda must lie in (0.9, 1]");
  }
  const auto n = series.size();
  const auto params = static_cast<std::size_t>(order.p + order.q);
  if (n < 10 * params || n <= static_cast<std::size_t>(order.d)) {
    throw ForecastError(ForecastError::Code::SeriesTooShort,
                        "series of length " + std::to_string(n) + " is too short for the order");
  }
  for (double v : series) {
    if (!std::isfinite(v)) {
      throw ForecastError(ForecastError::Code::NumericalBreakdown, "series has non-finite values");
    }
  }

  std::vector<double> w = difference(series, order.d).values;
  const double mean = std::accumulate(w.begin(), w.end(), 0.0) / static_cast<double>(w.size());
  for (double& v : w) v -= mean;

  const auto p = static_cast<std::size_t>(order.p);
  const auto q = static_cast<std::size_t>(order.q);
  RecursiveLeastSquares rls(static_cast<int>(params), lambda);
  std::vector<double> posterior(w.size(), 0.0);
  std::vector<double> previous;
  std::vector<double> ar(p), ma(q);
  Eigen::VectorXd phi(static_cast<Eigen::Index>(params));
  const int sweeps = q > 0 ? kRlsSweeps : 1;
  for (int sweep = 0; sweep < sweeps; ++sweep) {
    // First sweep: running a posteriori residuals. Later sweeps: residuals of
    // the previous sweep's model.
    const std::vector<double>& lagged = sweep == 0 ? posterior : previous;
    for (std::size_t t = 0; t < w.size(); ++t) {
      for (std::size_t i = 1; i <= p; ++i) {
        phi(static_cast<Eigen::Index>(i - 1)) = t >= i ? w[t - i] : 0.0;
      }
      for (std::size_t j = 1; j <= q; ++j) {
        phi(static_cast<Eigen::Index>(p + j - 1)) = t >= j ? lagged[t - j] : 0.0;
      }
      rls.update(phi, w[t]);
      posterior[t] = w[t] - phi.dot(rls.estimate());
    }
    const Eigen::VectorXd& theta = rls.estimate();
    for (std::size_t i = 0; i < p; ++i) ar[i] = theta(static_cast<Eigen::Index>(i));
    for (std::size_t j = 0; j < q; ++j) ma[j] = theta(static_cast<Eigen::Index>(p + j));
    if (sweep + 1 < sweeps) {
      previous = filter_residuals(w, ar, invertible_ma(ma));
      previous.insert(previous.begin(), std::min(p, w.size()), 0.0);
    }
  }
  if (!rls.covariance_positive_definite()) {
    throw ForecastError(ForecastError::Code::NumericalBreakdown,
                        "covariance lost positive definiteness");
  }

  ma = invertible_ma(ma);

  std::vector<double> residuals = filter_residuals(w, ar, ma);
  double variance = 0.0;
  for (double e : residuals) variance += e * e;
  if (!residuals.empty()) variance /= static_cast<double>(residuals.size());
  if (!std::isfinite(variance)) {
    throw ForecastError(ForecastError::Code::NumericalBreakdown, "residuals diverged");
  }

  std::vector<double> history;
  for (std::size_t j = 0; j < q && j < posterior.size(); ++j) {
    history.push_back(posterior[posterior.size() - 1 - j]);
  }
  return FitResult{ArimaModel(order, std::move(ar), std::move(ma), mean, variance),
                   std::move(residuals), std::move(history)};
}

}  // namespace vesselplan::forecast
