#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "vesselplan/domain.hpp"

namespace vesselplan::forecast {

class ForecastError : public std::runtime_error {
 public:
  enum class Code {
    SeriesTooShort,
    LengthMismatch,
    NumericalBreakdown,
    NoninvertibleMa,
    Degenerate,
    InvalidArgument,
  };

  ForecastError(Code code, const std::string& detail)
      : std::runtime_error(std::string(code_name(code)) + ": " + detail), code_(code) {}
  Code code() const noexcept { return code_; }
  static const char* code_name(Code c);

 private:
  Code code_;
};

/// (p, d, q). All orders nonnegative and not all zero.
struct ArimaOrder {
  int p = 0;
  int d = 0;
  int q = 0;

  ArimaOrder(int p, int d, int q);
  /// Parses "p,d,q".
  static ArimaOrder parse(const std::string& text);

  friend bool operator==(const ArimaOrder&, const ArimaOrder&) = default;
};

/// A(B) (1-B)^d (y(t) - trend(t)) = C(B) e(t), with
///   A(B) = 1 - a_1 B - ... - a_p B^p
///   C(B) = 1 + c_1 B + ... + c_q B^q.
/// `series_mean` is the mean of the d-times differenced series: the level
/// mean when d = 0, the per-week drift when d = 1.
struct ArimaModel {
  ArimaOrder order;
  std::vector<double> ar_coeffs;
  std::vector<double> ma_coeffs;
  double series_mean = 0.0;
  double noise_variance = 0.0;

  ArimaModel(ArimaOrder order, std::vector<double> ar, std::vector<double> ma,
             double series_mean = 0.0, double noise_variance = 0.0);

  /// Coefficients of A(B)(1-B)^d, leading 1 first.
  std::vector<double> integrated_ar_poly() const;
  /// Coefficients of C(B), leading 1 first.
  std::vector<double> ma_poly() const;
};

// --- differencing ----------------------------------------------------------

struct Differenced {
  std::vector<double> values;
  /// First element of each intermediate level 0..d-1; what integrate needs.
  std::vector<double> initial;
};

Differenced difference(std::span<const double> series, int d);
std::vector<double> integrate(std::span<const double> differenced, std::span<const double> initial,
                              int d);

// --- estimation ------------------------------------------------------------

/// Exponentially weighted recursive least squares.
class RecursiveLeastSquares {
 public:
  RecursiveLeastSquares(int parameters, double forgetting_factor, double initial_covariance = 1e6);

  /// One observation y = phi' theta + e. Returns the a priori prediction
  /// error. Throws NumericalBreakdown if the covariance stops being finite
  /// and positive on its diagonal.
  double update(const Eigen::VectorXd& regressor, double observation);

  const Eigen::VectorXd& estimate() const { return theta_; }
  const Eigen::MatrixXd& covariance() const { return covariance_; }
  double forgetting_factor() const { return lambda_; }
  /// Cholesky succeeds on the symmetrised covariance.
  bool covariance_positive_definite() const;

 private:
  Eigen::VectorXd theta_;
  Eigen::MatrixXd covariance_;
  double lambda_;
};

struct FitResult {
  ArimaModel model;
  /// In-sample residuals of the final model on the differenced scale,
  /// conditional on the first p values (length n - d - p).
  std::vector<double> residuals;
  /// The last q a posteriori residuals seen by the estimator.
  std::vector<double> residual_history;
};

/// Passes over the sample made by rls_fit when q > 0.
inline constexpr int kRlsSweeps = 3;

/// Differences, centres, then runs extended least squares on
/// [w(t-1..t-p), e(t-1..t-q)] with forgetting factor lambda in (0.9, 1].
/// With q > 0 the recursion sweeps the sample kRlsSweeps times, carrying the
/// estimate and covariance forward; after the first sweep the lagged
/// residuals come from the previous sweep's model.
/// The returned MA polynomial is the invertible one: estimated roots inside
/// the unit circle are reflected to 1/conj(r), which leaves the
/// autocorrelation structure unchanged.
FitResult rls_fit(std::span<const double> series, ArimaOrder order, double lambda);

/// One-step in-sample predictions on the original scale, same length as
/// `series`.
std::vector<double> fitted_values(const ArimaModel& model, std::span<const double> series);

// --- prediction ------------------------------------------------------------

/// Solution of C(B) = A(B)(1-B)^d F(B) + B^k G(B) with deg F = k - 1.
struct AstromPredictor {
  std::vector<double> f_poly;
  std::vector<double> g_poly;
  int horizon = 1;

  static AstromPredictor design(const ArimaModel& model, int k);
  /// max |coefficient| of C - A(1-B)^d F - B^k G.
  double identity_error(const ArimaModel& model) const;
};

/// Moduli of the roots of C(B); empty when q = 0 or C(B) = 1.
std::vector<double> ma_root_moduli(const ArimaModel& model);
bool ma_invertible(const ArimaModel& model);

/// Minimum-variance k-step forecast Y(t+k|t) = [G(B)/C(B)] y(t), returned on
/// the original scale. The series is taken as constant before its first
/// observation (at the mean when d = 0). Throws NoninvertibleMa.
double astrom_predict(const ArimaModel& model, std::span<const double> history, int k);

/// The same forecast by conditional expectation: rebuild e(t) from the
/// history, then run the model forward with future shocks set to zero.
double conditional_expectation_predict(const ArimaModel& model, std::span<const double> history,
                                       int k);

/// Fit, then astrom_predict for k = 1..horizon; rounded half-up and clamped
/// at zero.
DemandSeries forecast_demand(const DemandSeries& series, ArimaOrder order, double lambda,
                             int horizon);

// --- diagnostics -----------------------------------------------------------

std::vector<double> acf(std::span<const double> series, int max_lag);
/// Durbin-Levinson recursion; pacf[0] = 1.
std::vector<double> pacf(std::span<const double> series, int max_lag);

struct WhitenessResult {
  double statistic = 0.0;
  int degrees_of_freedom = 0;
  double critical_value = 0.0;
  bool pass = false;
};

/// Ljung-Box portmanteau test at the 5% level with max_lag - fitted_params
/// degrees of freedom.
WhitenessResult whiteness_check(std::span<const double> residuals, int max_lag,
                                int fitted_params = 0);

/// 95th percentile of chi-square(df).
double chi_square_critical_95(int df);

double r_squared(std::span<const double> fitted, std::span<const double> actual);

}  // namespace vesselplan::forecast
