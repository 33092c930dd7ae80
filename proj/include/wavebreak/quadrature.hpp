#pragma once

#include <functional>

namespace wavebreak {

struct QuadratureResult {
    double value;
    double error_estimate;
    bool converged;
};

/// Adaptive Gauss-Kronrod 7/15 integration of f over [a, b].
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double abs_tol = 1e-12, double rel_tol = 1e-10, int max_intervals = 20000);

/// Like integrate(), but throws std::runtime_error when not converged.
double integrate_or_throw(const std::function<double(double)>& f, double a, double b,
                          double abs_tol = 1e-12, double rel_tol = 1e-10, int max_intervals = 20000);

}  // namespace wavebreak
