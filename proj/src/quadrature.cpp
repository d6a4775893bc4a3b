#include "channelpx/quadrature.hpp"

#include "channelpx/errors.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace channelpx {

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double abs_tol, double rel_tol, int max_depth) {
    QuadResult out;
    if (a == b) return out;
    if (a > b) throw InvalidParams("integrate requires a <= b");

    auto counted = [&](double x) {
        ++out.function_evals;
        return f(x);
    };
    // Drive the subdivision harder than the requested gate so the final
    // estimate comfortably clears it; G7-K15 error estimates are conservative.
    double engine_tol = std::max(rel_tol * 1e-2, 5e-15);
    double err = 0.0;
    out.value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        counted, a, b, static_cast<unsigned>(max_depth), engine_tol, &err);
    out.error_estimate = err;

    double gate = std::max(abs_tol, rel_tol * std::fabs(out.value));
    if (!(err <= gate) || !std::isfinite(out.value)) {
        std::ostringstream msg;
        msg << "quadrature error estimate " << err << " exceeds tolerance " << gate
            << " on [" << a << ", " << b << "]";
        throw QuadratureFailure(msg.str());
    }
    return out;
}

QuadResult integrate_segments(const std::function<double(double)>& f,
                              const std::vector<double>& points,
                              double abs_tol, double rel_tol, int max_depth) {
    if (points.size() < 2) throw InvalidParams("integrate_segments needs at least two points");
    QuadResult total;
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        QuadResult part = integrate(f, points[i], points[i + 1], abs_tol, rel_tol, max_depth);
        total.value += part.value;
        total.error_estimate += part.error_estimate;
        total.function_evals += part.function_evals;
    }
    return total;
}

double signed_integral(const std::function<double(double)>& f, double a, double b,
                       double abs_tol, double rel_tol) {
    if (a <= b) return integrate(f, a, b, abs_tol, rel_tol).value;
    return -integrate(f, b, a, abs_tol, rel_tol).value;
}

} // namespace channelpx
