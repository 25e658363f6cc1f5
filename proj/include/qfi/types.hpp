// types.hpp — Shared scalar/matrix aliases, error types, and small numeric helpers.

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace qfi {

using Complex    = std::complex<double>;
using Matrix     = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using Index      = Eigen::Index;

// Input/contract violations (CLI exit code 2).
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Numerical-diagnostic failures: divergence guards, ill-conditioned kernels,
// non-converged solvers (CLI exit code 3).
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

// log(1 + e^u) without overflow
template <class Real>
Real softplus(Real u) {
    return std::max<Real>(u, 0) + std::log1p(std::exp(-std::abs(u)));
}

// log(expm1(v)/v), finite for all v; equals 0 at v = 0
template <class Real>
Real log_expm1_over(Real v) {
    if (v == 0) return 0;
    if (v > 30)  return v - std::log(v);
    if (v < -30) return -std::log(-v);
    return std::log(std::expm1(v) / v);
}

// logarithmic mean of two positive numbers given also their logs;
// lm(a, b) = (a - b)/(log a - log b), continuous limit lm(a, a) = a
inline double log_mean(double a, double la, double b, double lb) {
    const double u = la - lb;
    if (u == 0) return b;
    return b * std::expm1(u) / u;
}

} // namespace detail
} // namespace qfi
