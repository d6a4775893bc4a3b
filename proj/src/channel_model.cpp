#include "channelpx/channel_model.hpp"

#include "channelpx/errors.hpp"
#include "channelpx/math.hpp"
#include "channelpx/quadrature.hpp"

#include <cmath>
#include <sstream>

namespace channelpx {

void ChannelParams::validate() const {
    if (!std::isfinite(center_a) || !std::isfinite(half_width_b) || !std::isfinite(nu) ||
        !std::isfinite(sigma) || !std::isfinite(x_star)) {
        throw InvalidParams("channel parameters must be finite");
    }
    if (!(center_a > half_width_b && half_width_b > 0.0)) {
        throw InvalidParams("channel requires A > B > 0 for positive boundaries");
    }
    if (!(nu > 0.0)) throw InvalidParams("channel requires nu > 0");
    if (!(sigma > 0.0)) throw InvalidParams("channel requires sigma > 0");
}

double drift_mu(double x, const ChannelParams& p) {
    return p.nu * p.sigma * p.sigma * std::tanh(p.nu * (x - p.x_star));
}

double s_of_x(double x, const ChannelParams& p) {
    return p.center_a + p.half_width_b * std::tanh(p.nu * (x - p.x_star));
}

double x_of_s(double s, const ChannelParams& p) {
    double u = (s - p.center_a) / p.half_width_b;
    if (!(u > -1.0 && u < 1.0)) {
        std::ostringstream msg;
        msg << "price " << s << " is outside the open channel (" << p.lower() << ", "
            << p.upper() << ")";
        throw PriceOutsideChannel(msg.str());
    }
    return p.x_star + std::atanh(u) / p.nu;
}

double log_density(double x, double x0, double tau, const ChannelParams& p) {
    if (!(tau > 0.0)) throw NonpositiveTime("density requires elapsed time tau > 0");
    double v = p.sigma * p.sigma * tau;
    double dz = x - x0;
    return math::log_cosh(p.nu * (x - p.x_star)) - math::log_cosh(p.nu * (x0 - p.x_star)) -
           dz * dz / (2.0 * v) - 0.5 * p.nu * p.nu * v - 0.5 * std::log(math::two_pi * v);
}

double density(double x, double x0, double tau, const ChannelParams& p) {
    return std::exp(log_density(x, x0, tau, p));
}

MixtureDecomposition mixture_decomposition(double x0, double tau, const ChannelParams& p) {
    if (!(tau > 0.0)) throw NonpositiveTime("mixture decomposition requires tau > 0");
    double s_t = s_of_x(x0, p);
    double weight_plus = (s_t - p.lower()) / (p.upper() - p.lower());
    double mu_star = p.sigma * p.sigma * p.nu;
    double variance = p.sigma * p.sigma * tau;
    MixtureDecomposition out;
    out.weight_plus = weight_plus;
    out.weight_minus = 1.0 - weight_plus;  // complements exactly
    out.mu_star = mu_star;
    out.gaussian_plus = {x0 + mu_star * tau, variance};
    out.gaussian_minus = {x0 - mu_star * tau, variance};
    return out;
}

double zero_mode_martingale(const std::function<double(double)>& mu, double x,
                            double x_ref, const ChannelParams& p) {
    p.validate();
    double scale = 2.0 / (p.sigma * p.sigma);
    auto slope = [&](double u) {
        return std::exp(-scale * signed_integral(mu, 0.0, u, 1e-13, 1e-12));
    };
    double unit_increment = integrate(slope, x_ref, x_ref + 1.0, 1e-12, 1e-10).value;
    return signed_integral(slope, x_ref, x, 1e-12, 1e-10) / unit_increment;
}

double exp_martingale(double rho, int sign, double x, double t, const ChannelParams& p) {
    if (!(rho > 0.0)) {
        throw NonpositiveRho("exp_martingale requires rho > 0; rho <= 0 modes are not monotonic");
    }
    if (sign != 1 && sign != -1) throw InvalidParams("exp_martingale sign must be +1 or -1");
    double lambda = std::sqrt(rho + p.nu * p.nu);
    double z = x - p.x_star;
    return std::exp(sign * lambda * z - math::log_cosh(p.nu * z) -
                    0.5 * rho * p.sigma * p.sigma * t);
}

double drift_nonzero_rate(double r, double x, const ChannelParams& p) {
    double base = drift_mu(x, p);
    if (r == 0.0) return base;
    double t = std::tanh(p.nu * (x - p.x_star));
    double sech2 = 1.0 - t * t;  // underflows to 0 far out; the drift then diverges by design
    return r * (p.center_a + p.half_width_b * t) / (p.half_width_b * p.nu * sech2) + base;
}

} // namespace channelpx
