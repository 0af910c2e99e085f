#ifndef LUBRIDRAG_QUADRATURE_HPP
#define LUBRIDRAG_QUADRATURE_HPP

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>

namespace lubridrag {

/// Tolerances and budget for the adaptive integrator.
struct QuadConfig {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_subdivisions = 2000;
};

/// Result of a numerical integration. On success the estimate satisfies
/// err_estimate <= max(abs_tol, rel_tol*|value|).
struct QuadResult {
    double value = 0.0;
    double err_estimate = 0.0;
    long n_evals = 0;
};

class NonConvergenceError : public std::runtime_error {
public:
    explicit NonConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

class NonFiniteError : public std::runtime_error {
public:
    explicit NonFiniteError(const std::string& what) : std::runtime_error(what) {}
};

using Integrand = std::function<double(double)>;

/// Globally adaptive Gauss-Kronrod 15/7 integration of f over [a, b].
/// Panels are bisected worst-error-first; the final sum runs over panels
/// sorted by position so the result does not depend on refinement order.
QuadResult integrate(const Integrand& f, double a, double b, const QuadConfig& cfg = {});

/// Integral of f over [a, inf) via the compactifying map s = a + t/(1-t).
/// The caller guarantees f decays at least like s^-2.
QuadResult integrate_semi_infinite(const Integrand& f, double a, const QuadConfig& cfg = {});

} // namespace lubridrag

#endif
