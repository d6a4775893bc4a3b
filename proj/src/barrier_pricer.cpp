#include "channelpx/barrier_pricer.hpp"

#include "channelpx/errors.hpp"
#include "channelpx/math.hpp"
#include "channelpx/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace channelpx {

void BarrierMarket::validate() const {
    if (!std::isfinite(spot) || !std::isfinite(sigma) || !std::isfinite(rate) ||
        !std::isfinite(carry) || !std::isfinite(lower) || !std::isfinite(upper)) {
        throw InvalidMarket("barrier market fields must be finite");
    }
    if (!(lower > 0.0 && lower < upper)) {
        throw InvalidMarket("barriers must satisfy 0 < lower < upper");
    }
    if (!(spot >= lower && spot <= upper)) {
        std::ostringstream msg;
        msg << "spot " << spot << " must lie in [" << lower << ", " << upper << "]";
        throw InvalidMarket(msg.str());
    }
    if (!(sigma > 0.0)) throw InvalidMarket("sigma must be positive");
}

namespace {

constexpr double kSeriesTol = 1e-12;
constexpr int kMaxImagePairs = 32;
constexpr int kMaxEigenModes = 512;
// Below sigma^2*tau = 1e-4 the eigenfunction series converges slowly; the
// finite-difference solver is the required baseline there.
constexpr double kSmallTauThreshold = 1e-4;

struct LogStrip {
    double x0;  // ln(S/L)
    double x1;  // ln(K/L)
    double z;   // ln(U/L)
    double m;   // b/sigma^2 - 1/2
    double v;   // sigma^2 * tau
    double sv;  // sigma * sqrt(tau)
};

LogStrip make_strip(const BarrierMarket& mkt, double strike, double tau) {
    LogStrip s;
    s.x0 = std::log(mkt.spot / mkt.lower);
    s.x1 = std::log(strike / mkt.lower);
    s.z = std::log(mkt.upper / mkt.lower);
    s.m = mkt.carry / (mkt.sigma * mkt.sigma) - 0.5;
    s.v = mkt.sigma * mkt.sigma * tau;
    s.sv = std::sqrt(s.v);
    return s;
}

// One image contribution: the killed-density image centered at c integrated
// against the payoff over [lo, hi]. log_amp already folds the measure-change
// prefactor; the normal-CDF difference is attached in log space so huge image
// exponents cannot overflow before their Gaussian mass kills them.
double weighted_tail(double c, double k, double lo, double hi, double log_amp,
                     const LogStrip& s) {
    double pd = math::norm_cdf_diff((hi - c) / s.sv - k * s.sv, (lo - c) / s.sv - k * s.sv);
    if (pd <= 0.0) return 0.0;
    return std::exp(log_amp + k * c + std::log(pd));
}

struct ImageSum {
    double value = 0.0;
    long centers = 0;
    double truncation_bound = 0.0;
};

ImageSum dko_image_sum(const BarrierMarket& mkt, double strike, double tau, bool put) {
    LogStrip s = make_strip(mkt, strike, tau);
    double lo = put ? 0.0 : s.x1;
    double hi = put ? s.x1 : s.z;
    double b_tau = mkt.carry * tau;
    double log_amp_s = std::log(mkt.lower) - s.m * s.x0 + b_tau;  // forward leg, k = m+1
    double log_amp_k = std::log(strike) - s.m * s.x0;             // strike leg, k = m

    auto image_term = [&](double c) {
        double fwd = weighted_tail(c, s.m + 1.0, lo, hi, log_amp_s, s);
        double stk = weighted_tail(c, s.m, lo, hi, log_amp_k, s);
        return put ? stk - fwd : fwd - stk;
    };
    auto pair_at = [&](int n, double* magnitude) {
        double t_direct = image_term(s.x0 + 2.0 * n * s.z);
        double t_reflect = image_term(-s.x0 + 2.0 * n * s.z);
        *magnitude = std::fabs(t_direct) + std::fabs(t_reflect);
        return t_direct - t_reflect;
    };

    ImageSum out;
    double mag = 0.0;
    out.value = pair_at(0, &mag);
    out.centers = 2;
    for (int n = 1; n <= kMaxImagePairs; ++n) {
        double mag_pos = 0.0, mag_neg = 0.0;
        out.value += pair_at(n, &mag_pos);
        out.value += pair_at(-n, &mag_neg);
        out.centers += 4;
        if (mag_pos + mag_neg < kSeriesTol) {
            double next = 0.0;
            pair_at(n + 1, &next);
            out.truncation_bound = next;
            return out;
        }
    }
    throw SeriesNotConverged("image series did not converge within 32 symmetric pairs");
}

PriceResult dko_price(const BarrierMarket& mkt, double strike, double tau, bool put) {
    mkt.validate();
    if (!(tau > 0.0)) throw NonpositiveTime("barrier pricing requires tau > 0");
    if (!(strike > mkt.lower && strike < mkt.upper)) {
        throw InvalidStrike("strike must lie strictly between the barriers");
    }
    PriceResult out{0.0, PricingMethod::series, {}};
    if (mkt.spot == mkt.lower || mkt.spot == mkt.upper) {
        out.price = 0.0;
        out.method = PricingMethod::closed_form;
        out.diag.settled = true;
        return out;
    }
    if (mkt.sigma * mkt.sigma * tau < kSmallTauThreshold) {
        out.price = pde_claim_price(mkt, put ? BarrierClaim::dko_put : BarrierClaim::dko_call,
                                    strike, tau, PdeGrid{});
        out.method = PricingMethod::quadrature;
        return out;
    }
    ImageSum sum = dko_image_sum(mkt, strike, tau, put);
    out.price = std::max(std::exp(-mkt.rate * tau) * sum.value, 0.0);
    out.diag.series_terms = sum.centers;
    out.diag.truncation_bound = sum.truncation_bound;
    return out;
}

struct EigenSum {
    double value = 0.0;
    long modes = 0;
    double truncation_bound = 0.0;
};

// Transient part of the one-touch value. The steady part solves the
// time-independent boundary-value problem exactly; each mode decays like
// exp(-theta_i * tau) with theta_i ~ i^2, so convergence is geometric for
// tau > 0.
EigenSum one_touch_transient(double x, double z, double m, double w, double rate,
                             double sigma, double tau, bool upper) {
    EigenSum out;
    double emx = std::exp(-m * x);
    for (int i = 1; i <= kMaxEigenModes; ++i) {
        double ki = i * math::pi / z;
        double theta = 0.5 * sigma * sigma * (ki * ki + m * m) + rate;
        double damp = std::exp(-theta * tau);
        double coef = upper ? 2.0 * ki * (i % 2 == 0 ? 1.0 : -1.0) * std::exp(m * z) /
                                  (z * (w * w + ki * ki))
                            : -2.0 * ki / (z * (w * w + ki * ki));
        out.value += coef * emx * std::sin(ki * x) * damp;
        out.modes = i;
        double envelope = std::fabs(coef) * emx * damp;
        if (envelope < kSeriesTol) {
            double ki1 = (i + 1) * math::pi / z;
            double theta1 = 0.5 * sigma * sigma * (ki1 * ki1 + m * m) + rate;
            out.truncation_bound = 2.0 * ki1 * std::exp(std::fabs(m) * z) /
                                   (z * (w * w + ki1 * ki1)) * emx * std::exp(-theta1 * tau);
            return out;
        }
    }
    throw SeriesNotConverged("one-touch eigenfunction series did not converge within 512 modes");
}

PriceResult one_touch_price(const BarrierMarket& mkt, double tau, bool upper) {
    mkt.validate();
    if (!(tau > 0.0)) throw NonpositiveTime("barrier pricing requires tau > 0");
    PriceResult out{0.0, PricingMethod::series, {}};
    if (mkt.spot == (upper ? mkt.upper : mkt.lower)) {
        out.price = 1.0;
        out.method = PricingMethod::closed_form;
        out.diag.settled = true;
        return out;
    }
    if (mkt.spot == (upper ? mkt.lower : mkt.upper)) {
        out.price = 0.0;
        out.method = PricingMethod::closed_form;
        out.diag.settled = true;
        return out;
    }
    if (mkt.sigma * mkt.sigma * tau < kSmallTauThreshold) {
        out.price = pde_claim_price(
            mkt, upper ? BarrierClaim::one_touch_upper : BarrierClaim::one_touch_lower, 0.0,
            tau, PdeGrid{});
        out.method = PricingMethod::quadrature;
        return out;
    }
    double x = std::log(mkt.spot / mkt.lower);
    double z = std::log(mkt.upper / mkt.lower);
    double m = mkt.carry / (mkt.sigma * mkt.sigma) - 0.5;
    double w = std::sqrt(m * m + 2.0 * mkt.rate / (mkt.sigma * mkt.sigma));
    double steady = upper ? std::exp(m * (z - x)) * math::sinh_ratio(w, x, z)
                          : std::exp(-m * x) * math::sinh_ratio(w, z - x, z);
    EigenSum sum = one_touch_transient(x, z, m, w, mkt.rate, mkt.sigma, tau, upper);
    out.price = std::clamp(steady + sum.value, 0.0, 1.0);
    out.diag.series_terms = sum.modes;
    out.diag.truncation_bound = sum.truncation_bound;
    return out;
}

Diagnostics merge_diag(const PriceResult& a, const PriceResult& b) {
    Diagnostics d;
    if (a.diag.series_terms || b.diag.series_terms) {
        d.series_terms = a.diag.series_terms.value_or(0) + b.diag.series_terms.value_or(0);
    }
    if (a.diag.truncation_bound || b.diag.truncation_bound) {
        d.truncation_bound =
            a.diag.truncation_bound.value_or(0.0) + b.diag.truncation_bound.value_or(0.0);
    }
    return d;
}

} // namespace

PriceResult dko_call(const BarrierMarket& mkt, double strike, double tau) {
    return dko_price(mkt, strike, tau, false);
}

PriceResult dko_put(const BarrierMarket& mkt, double strike, double tau) {
    return dko_price(mkt, strike, tau, true);
}

PriceResult one_touch_upper(const BarrierMarket& mkt, double tau) {
    return one_touch_price(mkt, tau, true);
}

PriceResult one_touch_lower(const BarrierMarket& mkt, double tau) {
    return one_touch_price(mkt, tau, false);
}

PriceResult channel_call(const BarrierMarket& mkt, double strike, double tau) {
    mkt.validate();
    if (!(strike > mkt.lower && strike < mkt.upper)) {
        throw InvalidStrike("strike must lie strictly between the barriers");
    }
    if (mkt.spot == mkt.upper || mkt.spot == mkt.lower) {
        PriceResult settled{mkt.spot == mkt.upper ? mkt.upper - strike : 0.0,
                            PricingMethod::closed_form, {}};
        settled.diag.settled = true;
        return settled;
    }
    PriceResult dko = dko_call(mkt, strike, tau);
    PriceResult touch = one_touch_upper(mkt, tau);
    PriceResult out{dko.price + (mkt.upper - strike) * touch.price, PricingMethod::series,
                    merge_diag(dko, touch)};
    if (dko.method == PricingMethod::quadrature || touch.method == PricingMethod::quadrature) {
        out.method = PricingMethod::quadrature;
    }
    return out;
}

PriceResult channel_put(const BarrierMarket& mkt, double strike, double tau) {
    mkt.validate();
    if (!(strike > mkt.lower && strike < mkt.upper)) {
        throw InvalidStrike("strike must lie strictly between the barriers");
    }
    if (mkt.spot == mkt.upper || mkt.spot == mkt.lower) {
        PriceResult settled{mkt.spot == mkt.lower ? strike - mkt.lower : 0.0,
                            PricingMethod::closed_form, {}};
        settled.diag.settled = true;
        return settled;
    }
    PriceResult dko = dko_put(mkt, strike, tau);
    PriceResult touch = one_touch_lower(mkt, tau);
    PriceResult out{dko.price + (strike - mkt.lower) * touch.price, PricingMethod::series,
                    merge_diag(dko, touch)};
    if (dko.method == PricingMethod::quadrature || touch.method == PricingMethod::quadrature) {
        out.method = PricingMethod::quadrature;
    }
    return out;
}

double bs_call(double spot, double strike, double rate, double carry, double sigma,
               double tau) {
    double sv = sigma * std::sqrt(tau);
    double d1 = (std::log(spot / strike) + (carry + 0.5 * sigma * sigma) * tau) / sv;
    double d2 = d1 - sv;
    return spot * std::exp((carry - rate) * tau) * math::norm_cdf(d1) -
           strike * std::exp(-rate * tau) * math::norm_cdf(d2);
}

double bs_put(double spot, double strike, double rate, double carry, double sigma,
              double tau) {
    double sv = sigma * std::sqrt(tau);
    double d1 = (std::log(spot / strike) + (carry + 0.5 * sigma * sigma) * tau) / sv;
    double d2 = d1 - sv;
    return strike * std::exp(-rate * tau) * math::norm_cdf(-d2) -
           spot * std::exp((carry - rate) * tau) * math::norm_cdf(-d1);
}

} // namespace channelpx
