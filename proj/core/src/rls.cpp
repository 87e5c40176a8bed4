#include <cmath>

#include "vesselplan/forecast.hpp"

namespace vesselplan::forecast {

RecursiveLeastSquares::RecursiveLeastSquares(int parameters, double forgetting_factor,
                                             double initial_covariance)
    : theta_(Eigen::VectorXd::Zero(parameters)),
      covariance_(Eigen::MatrixXd::Identity(parameters, parameters) * initial_covariance),
      lambda_(forgetting_factor) {
  if (parameters < 0) throw ForecastError(ForecastError::Code::InvalidArgument, "parameters < 0");
  if (!(forgetting_factor > 0.9 && forgetting_factor <= 1.0)) {
    throw ForecastError(ForecastError::Code::InvalidArgument,
                        "forgetting factor must lie in (0.9, 1]");
  }
  if (!(initial_covariance > 0.0)) {
    throw ForecastError(ForecastError::Code::InvalidArgument, "initial covariance must be > 0");
  }
}

double RecursiveLeastSquares::update(const Eigen::VectorXd& regressor, double observation) {
  const double error = observation - regressor.dot(theta_);
  if (theta_.size() == 0) return error;

  const Eigen::VectorXd p_phi = covariance_ * regressor;
  const double denom = lambda_ + regressor.dot(p_phi);
  if (!std::isfinite(denom) || denom <= 0.0) {
    throw ForecastError(ForecastError::Code::NumericalBreakdown, "gain denominator not positive");
  }
  const Eigen::VectorXd gain = p_phi / denom;
  theta_ += gain * error;
  covariance_ = (covariance_ - gain * p_phi.transpose()) / lambda_;
  covariance_ = 0.5 * (covariance_ + covariance_.transpose()).eval();

  for (Eigen::Index i = 0; i < covariance_.rows(); ++i) {
    const double v = covariance_(i, i);
    if (!std::isfinite(v) || v <= 0.0) {
      throw ForecastError(ForecastError::Code::NumericalBreakdown,
                          "covariance lost positive definiteness");
    }
  }
  if (!theta_.allFinite()) {
    throw ForecastError(ForecastError::Code::NumericalBreakdown, "estimate not finite");
  }
  return error;
}

bool RecursiveLeastSquares::covariance_positive_definite() const {
  if (covariance_.size() == 0) return true;
  Eigen::LLT<Eigen::MatrixXd> llt(covariance_);
  return llt.info() == Eigen::Success;
}

}  // namespace vesselplan::forecast
