// monotone.hpp — Operator monotone functions f with f(1) = 1: the catalog
// (SLD/BKM/RLD/LLD/harmonic/WY/WYD), duals, fluctuation-dissipation coefficients,
// generalized means, and the (x-1)^2/f covariance weight.
//
// Every entry carries three views of the same function:
//   eval(x)        f(x) for x > 0
//   eval_log(u)    f(e^u), stable for large |u|
//   log_eval(u)    log f(e^u), used by superoperator kernels in log space

#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "qfi/types.hpp"

namespace qfi {

template <class Real = double>
struct MonotoneFunctionT {
    std::string name;
    std::function<Real(Real)> eval;
    std::function<Real(Real)> eval_log;  // u -> f(e^u)
    std::function<Real(Real)> log_eval;  // u -> log f(e^u)
    Real f_zero{0};                      // f(0+), may be 0
    bool standard{false};                // f == dual(f)

    Real operator()(Real x) const { return eval(x); }
};

using MonotoneFunction = MonotoneFunctionT<double>;

namespace monotone {

// ---------------------------------- catalog ----------------------------------

template <class Real = double>
MonotoneFunctionT<Real> sld() {
    MonotoneFunctionT<Real> f;
    f.name = "sld";
    f.eval = [](Real x) { return (x + 1) / 2; };
    f.eval_log = [](Real u) { return (std::exp(u) + 1) / 2; };
    f.log_eval = [](Real u) { return detail::softplus(u) - std::log(Real(2)); };
    f.f_zero = Real(0.5);
    f.standard = true;
    return f;
}

template <class Real = double>
MonotoneFunctionT<Real> bkm() {
    MonotoneFunctionT<Real> f;
    f.name = "bkm";
    f.eval = [](Real x) {
        const Real u = x - 1;
        if (std::abs(u) < Real(1e-4))
            return 1 + u / 2 - u * u / 12 + u * u * u / 24 - Real(19) / 720 * u * u * u * u;
        return u / std::log(x);
    };
    f.eval_log = [](Real u) {
        if (u > 700) return std::exp(u - std::log(u));  // (e^u - 1)/u to leading order
        if (u == 0) return Real(1);
        return std::expm1(u) / u;
    };
    f.log_eval = [](Real u) { return detail::log_expm1_over(u); };
    f.f_zero = 0;
    f.standard = true;
    return f;
}

template <class Real = double>
MonotoneFunctionT<Real> rld() {
    MonotoneFunctionT<Real> f;
    f.name = "rld";
    f.eval = [](Real x) { return x; };
    f.eval_log = [](Real u) { return std::exp(u); };
    f.log_eval = [](Real u) { return u; };
    f.f_zero = 0;
    f.standard = false;
    return f;
}

template <class Real = double>
MonotoneFunctionT<Real> lld() {
    MonotoneFunctionT<Real> f;
    f.name = "lld";
    f.eval = [](Real) { return Real(1); };
    f.eval_log = [](Real) { return Real(1); };
    f.log_eval = [](Real) { return Real(0); };
    f.f_zero = 1;
    f.standard = false;
    return f;
}

template <class Real = double>
MonotoneFunctionT<Real> harmonic() {
    MonotoneFunctionT<Real> f;
    f.name = "harmonic";
    f.eval = [](Real x) { return 2 * x / (x + 1); };
    f.eval_log = [](Real u) { return 2 / (1 + std::exp(-u)); };
    f.log_eval = [](Real u) { return std::log(Real(2)) + u - detail::softplus(u); };
    f.f_zero = 0;
    f.standard = true;
    return f;
}

template <class Real = double>
MonotoneFunctionT<Real> wy() {
    MonotoneFunctionT<Real> f;
    f.name = "wy";
    f.eval = [](Real x) {
        const Real s = std::sqrt(x) + 1;
        return s * s / 4;
    };
    f.eval_log = [](Real u) {
        const Real s = std::exp(u / 2) + 1;
        return s * s / 4;
    };
    f.log_eval = [](Real u) {
        return 2 * detail::softplus(u / 2) - std::log(Real(4));
    };
    f.f_zero = Real(0.25);
    f.standard = true;
    return f;
}

// (x^a - 1) = a u (1 + (a-1)/2 u + (a-1)(a-2)/6 u^2 + (a-1)(a-2)(a-3)/24 u^3) + O(u^5),
// u = x - 1; used to remove the 0/0 at x = 1 of the WYD family.
template <class Real>
Real wyd_binomial_series(Real a, Real u) {
    return 1 + (a - 1) / 2 * u + (a - 1) * (a - 2) / 6 * u * u +
           (a - 1) * (a - 2) * (a - 3) / 24 * u * u * u;
}

// f_alpha(x) = alpha(1-alpha)(x-1)^2 / ((x^alpha - 1)(x^{1-alpha} - 1)), alpha in (0,1)
template <class Real = double>
MonotoneFunctionT<Real> wyd(Real alpha) {
    if (!(alpha > 0 && alpha < 1))
        throw ValidationError("wyd: alpha must lie in (0,1), got " + std::to_string(double(alpha)));
    MonotoneFunctionT<Real> f;
    f.name = "wyd:" + std::to_string(double(alpha));
    f.eval = [alpha](Real x) {
        const Real u = x - 1;
        if (std::abs(u) < Real(1e-4))
            return 1 / (wyd_binomial_series(alpha, u) * wyd_binomial_series(1 - alpha, u));
        return alpha * (1 - alpha) * u * u /
               ((std::pow(x, alpha) - 1) * (std::pow(x, 1 - alpha) - 1));
    };
    // log f_alpha(e^u) = 2 m(u) - m(alpha u) - m((1-alpha) u), m(v) = log(expm1(v)/v);
    // the log(alpha(1-alpha)) and log|u| pieces cancel identically.
    f.log_eval = [alpha](Real u) {
        return 2 * detail::log_expm1_over(u) - detail::log_expm1_over(alpha * u) -
               detail::log_expm1_over((1 - alpha) * u);
    };
    f.eval_log = [lf = f.log_eval](Real u) { return std::exp(lf(u)); };
    f.f_zero = alpha * (1 - alpha);
    f.standard = true;
    return f;
}

inline const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names = {"sld", "bkm", "rld", "lld",
                                                   "harmonic", "wy", "wyd:ALPHA"};
    return names;
}

} // namespace monotone

// ------------------------------------ dual ------------------------------------

// dual(f)(x) = x f(1/x); involution, and f is standard iff dual(f) == f.
template <class Real>
MonotoneFunctionT<Real> dual(const MonotoneFunctionT<Real>& f) {
    if (f.name == "rld") return monotone::lld<Real>();
    if (f.name == "lld") return monotone::rld<Real>();
    if (f.standard) return f;
    MonotoneFunctionT<Real> d;
    d.name = "dual(" + f.name + ")";
    d.eval = [f](Real x) { return x * f.eval(1 / x); };
    d.eval_log = [f](Real u) { return std::exp(u) * f.eval_log(-u); };
    d.log_eval = [f](Real u) { return u + f.log_eval(-u); };
    // f(0+) of the dual is the slope of f at infinity; probe with a Richardson step
    const Real lo = d.eval(Real(1e-12));
    const Real hi = d.eval(Real(1e-10));
    d.f_zero = lo + (lo - hi) / 99;  // first-order extrapolation to 0
    d.standard = false;
    return d;
}

// Scalar sanity checks: f(1) = 1, positivity and monotone growth on a log grid.
// Necessary conditions only; operator monotonicity itself is trusted input.
template <class Real>
void validate_monotone_candidate(const MonotoneFunctionT<Real>& f, Real tol = Real(1e-12)) {
    if (std::abs(f.eval(1) - 1) > tol)
        throw ValidationError(f.name + ": f(1) = " + std::to_string(double(f.eval(1))) +
                              ", expected 1");
    Real prev = 0;
    for (int k = 0; k <= 160; ++k) {
        const Real x = std::pow(Real(10), Real(-8) + k * Real(0.1));
        const Real y = f.eval(x);
        if (!(y > 0))
            throw ValidationError(f.name + ": not positive at x = " + std::to_string(double(x)));
        if (y < prev - tol * std::max<Real>(1, std::abs(prev)))
            throw ValidationError(f.name + ": decreasing near x = " + std::to_string(double(x)));
        prev = y;
    }
}

// Numeric standardness test on a log grid (used for custom functions).
template <class Real>
bool is_standard_numeric(const MonotoneFunctionT<Real>& f, Real tol = Real(1e-12)) {
    for (int k = 0; k <= 100; ++k) {
        const Real x = std::pow(Real(10), Real(-6) + k * Real(0.12));
        const Real lhs = f.eval(x);
        const Real rhs = x * f.eval(1 / x);
        if (std::abs(lhs - rhs) > tol * std::max<Real>(1, std::abs(lhs))) return false;
    }
    return true;
}

// ------------------------- FDT coefficient and means --------------------------

// c_f(alpha) = f(e^{-alpha}) / (1 - e^{-alpha}), alpha = beta hbar omega.
// This is the frequency-dependent coefficient of the generalized
// fluctuation-dissipation relation; it diverges like 1/alpha at zero frequency.
template <class Real>
Real fdt_coefficient(const MonotoneFunctionT<Real>& f, Real alpha) {
    if (alpha == 0)
        throw ValidationError("fdt_coefficient: coefficient singular at zero frequency");
    if (std::abs(alpha) <= 30) {
        return f.eval_log(-alpha) / (-std::expm1(-alpha));
    }
    // log-domain evaluation; for alpha < 0 the denominator is negative
    const Real log_num = f.log_eval(-alpha);
    if (alpha > 0) return std::exp(log_num - std::log1p(-std::exp(-alpha)));
    const Real log_den = -alpha + std::log1p(-std::exp(alpha));  // log(e^{-alpha} - 1)
    return -std::exp(log_num - log_den);
}

// (nbar + 1) f(nbar/(nbar+1)): the generalized mean of nbar and nbar + 1.
// Arithmetic / geometric / harmonic / logarithmic means correspond to
// f = (x+1)/2, sqrt(x), 2x/(x+1), (x-1)/log x.
template <class Real>
Real generalized_mean(const MonotoneFunctionT<Real>& f, Real nbar) {
    if (nbar < 0) throw ValidationError("generalized_mean: nbar must be >= 0");
    if (nbar == 0) return f.f_zero;
    return (nbar + 1) * f.eval(nbar / (nbar + 1));
}

// ---------------------------- QFI covariance weight ---------------------------

// g(x) = (x-1)^2 / f(x) with g(1) = 0. Only a covariance weight; it is not
// claimed monotone and skips the catalog sanity checks.
template <class Real>
MonotoneFunctionT<Real> qfi_to_covariance_function(const MonotoneFunctionT<Real>& f) {
    MonotoneFunctionT<Real> g;
    g.name = "qfi_weight(" + f.name + ")";
    g.eval = [f](Real x) {
        const Real u = x - 1;
        return u * u / f.eval(x);
    };
    g.eval_log = [f](Real u) {
        const Real e = std::expm1(u);
        return e * e / f.eval_log(u);
    };
    g.log_eval = [f](Real u) {
        if (u == 0) return -std::numeric_limits<Real>::infinity();
        // log expm1(u)^2 = 2(log|u| + m(u)) with m from log_expm1_over
        return 2 * (std::log(std::abs(u)) + detail::log_expm1_over(u)) - f.log_eval(u);
    };
    g.f_zero = (f.f_zero > 0) ? 1 / f.f_zero : std::numeric_limits<Real>::infinity();
    g.standard = f.standard;
    return g;
}

} // namespace qfi
