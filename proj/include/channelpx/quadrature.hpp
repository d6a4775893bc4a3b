#pragma once

#include <functional>
#include <vector>

namespace channelpx {

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long function_evals = 0;
};

// Adaptive Gauss-Kronrod integration of f over [a, b]. Throws
// QuadratureFailure when the error estimate exceeds
// max(abs_tol, rel_tol * |value|).
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double abs_tol = 1e-12, double rel_tol = 1e-12,
                     int max_depth = 16);

// Integrates across consecutive panels delimited by `points` (sorted,
// size >= 2); interior points act as mandatory breakpoints (payoff kinks).
QuadResult integrate_segments(const std::function<double(double)>& f,
                              const std::vector<double>& points,
                              double abs_tol = 1e-12, double rel_tol = 1e-12,
                              int max_depth = 16);

// Signed integral: swaps limits when a > b.
double signed_integral(const std::function<double(double)>& f, double a, double b,
                       double abs_tol = 1e-12, double rel_tol = 1e-12);

} // namespace channelpx
