#pragma once

#include <complex>
#include <vector>

namespace vesselplan::forecast::detail {

/// Coefficients in ascending powers of B.
using Poly = std::vector<double>;

Poly multiply(const Poly& a, const Poly& b);
/// (1 - B)^d.
Poly difference_poly(int d);
/// Roots of a polynomial with nonzero constant term; trailing zeros ignored.
std::vector<std::complex<double>> roots(const Poly& p);
/// Rebuilds c0 * prod(1 - B / r).
Poly from_roots(double c0, const std::vector<std::complex<double>>& r);

}  // namespace vesselplan::forecast::detail
