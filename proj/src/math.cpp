#include "channelpx/math.hpp"

#include "channelpx/errors.hpp"

namespace channelpx::math {

namespace {

// Acklam's rational approximation for the inverse normal CDF.
constexpr double acklam_a[6] = {
    -3.969683028665376e+01, 2.209460984245205e+02, -2.759285104469687e+02,
    1.383577518672690e+02, -3.066479806614716e+01, 2.506628277459239e+00};
constexpr double acklam_b[5] = {
    -5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
    6.680131188771972e+01, -1.328068155288572e+01};
constexpr double acklam_c[6] = {
    -7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
    -2.549732539343734e+00, 4.374664141464968e+00, 2.938163982698783e+00};
constexpr double acklam_d[4] = {
    7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e+00,
    3.754408661907416e+00};

double acklam(double p) {
    constexpr double p_low = 0.02425;
    if (p < p_low) {
        double q = std::sqrt(-2.0 * std::log(p));
        return (((((acklam_c[0] * q + acklam_c[1]) * q + acklam_c[2]) * q + acklam_c[3]) * q +
                 acklam_c[4]) * q + acklam_c[5]) /
               ((((acklam_d[0] * q + acklam_d[1]) * q + acklam_d[2]) * q + acklam_d[3]) * q + 1.0);
    }
    if (p > 1.0 - p_low) {
        double q = std::sqrt(-2.0 * std::log(1.0 - p));
        return -(((((acklam_c[0] * q + acklam_c[1]) * q + acklam_c[2]) * q + acklam_c[3]) * q +
                  acklam_c[4]) * q + acklam_c[5]) /
               ((((acklam_d[0] * q + acklam_d[1]) * q + acklam_d[2]) * q + acklam_d[3]) * q + 1.0);
    }
    double q = p - 0.5;
    double r = q * q;
    return (((((acklam_a[0] * r + acklam_a[1]) * r + acklam_a[2]) * r + acklam_a[3]) * r +
             acklam_a[4]) * r + acklam_a[5]) * q /
           (((((acklam_b[0] * r + acklam_b[1]) * r + acklam_b[2]) * r + acklam_b[3]) * r +
             acklam_b[4]) * r + 1.0);
}

} // namespace

double inv_norm_cdf(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw InvalidParams("inv_norm_cdf requires p strictly inside (0, 1)");
    }
    double x = acklam(p);
    // Halley refinement using the high-accuracy CDF.
    double e = norm_cdf(x) - p;
    double u = e * sqrt_two_pi * std::exp(0.5 * x * x);
    x -= u / (1.0 + 0.5 * x * u);
    return x;
}

} // namespace channelpx::math
