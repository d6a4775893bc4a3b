#include "channelpx/channel_pricer.hpp"

#include "channelpx/errors.hpp"
#include "channelpx/math.hpp"

#include <algorithm>
#include <cmath>

namespace channelpx {

const char* to_string(PricingMethod m) {
    switch (m) {
        case PricingMethod::closed_form: return "closed_form";
        case PricingMethod::quadrature: return "quadrature";
        case PricingMethod::monte_carlo: return "monte_carlo";
        case PricingMethod::series: return "series";
    }
    return "unknown";
}

namespace {

struct StrikeClamp {
    bool clamped = false;
    double call_value = 0.0;
    std::string flag;
};

// Strikes at or beyond a boundary have a certain payoff sign at zero rate;
// callers pricing ladders need totality, so these settle with a flag.
StrikeClamp clamp_strike(double s_t, double strike, const ChannelParams& p) {
    StrikeClamp c;
    if (strike >= p.upper()) {
        c.clamped = true;
        c.call_value = 0.0;
        c.flag = strike == p.upper() ? "strike_at_upper_boundary" : "strike_above_upper_boundary";
    } else if (strike <= p.lower()) {
        c.clamped = true;
        c.call_value = s_t - strike;
        c.flag = strike == p.lower() ? "strike_at_lower_boundary" : "strike_below_lower_boundary";
    }
    return c;
}

struct CallTerms {
    double d_plus;
    double d_minus;
    double x0;
    double x1;
};

CallTerms call_terms(double s_t, double strike, double tau, const ChannelParams& p) {
    CallTerms t;
    t.x0 = x_of_s(s_t, p);
    t.x1 = x_of_s(strike, p);
    double st = p.sigma * std::sqrt(tau);
    t.d_plus = (t.x0 - t.x1) / st + p.nu * st;
    t.d_minus = (t.x0 - t.x1) / st - p.nu * st;
    return t;
}

} // namespace

double call_price_form(double s_t, const OptionSpec& spec, const ChannelParams& p,
                       CallForm form) {
    p.validate();
    if (!(spec.tau > 0.0)) throw NonpositiveTime("closed form requires tau > 0");
    CallTerms t = call_terms(s_t, spec.strike, spec.tau, p);
    double np = math::norm_cdf(t.d_plus);
    double nm = math::norm_cdf(t.d_minus);
    if (form == CallForm::boundary_weights) {
        double width = p.upper() - p.lower();
        return ((s_t - p.lower()) * (p.upper() - spec.strike) * np -
                (p.upper() - s_t) * (spec.strike - p.lower()) * nm) / width;
    }
    double z0 = p.nu * (t.x0 - p.x_star);
    double z1 = p.nu * (t.x1 - p.x_star);
    double delta = z0 - z1;
    double log_denom = math::log_cosh(z0) + math::log_cosh(z1) + std::log(2.0);
    return p.half_width_b *
           (std::exp(delta - log_denom) * np - std::exp(-delta - log_denom) * nm);
}

PriceResult call_price(double s_t, const OptionSpec& spec, const ChannelParams& p) {
    p.validate();
    if (spec.tau < 0.0) throw NegativeTime("option tau must be nonnegative");
    if (!(s_t > p.lower() && s_t < p.upper())) {
        throw PriceOutsideChannel("spot must lie strictly inside the channel");
    }
    PriceResult out{0.0, PricingMethod::closed_form, {}};
    StrikeClamp clamp = clamp_strike(s_t, spec.strike, p);
    if (clamp.clamped) {
        out.price = clamp.call_value;
        out.diag.strike_flag = clamp.flag;
        return out;
    }
    if (spec.tau == 0.0) {
        out.price = std::max(s_t - spec.strike, 0.0);
        return out;
    }
    out.price = call_price_form(s_t, spec, p, CallForm::boundary_weights);
    return out;
}

PriceResult put_price(double s_t, const OptionSpec& spec, const ChannelParams& p) {
    OptionSpec as_call = spec;
    as_call.kind = OptionKind::call;
    PriceResult out = call_price(s_t, as_call, p);
    if (spec.tau == 0.0 && !out.diag.strike_flag) {
        out.price = std::max(spec.strike - s_t, 0.0);
        return out;
    }
    out.price = out.price - s_t + spec.strike;
    return out;
}

double call_price_asymptotic(double s_t, double strike, const ChannelParams& p) {
    p.validate();
    if (!(s_t > p.lower() && s_t < p.upper())) {
        throw PriceOutsideChannel("spot must lie strictly inside the channel");
    }
    return (s_t - p.lower()) * (p.upper() - strike) / (p.upper() - p.lower());
}

std::pair<double, double> hitting_weights(double s_t, const ChannelParams& p) {
    p.validate();
    if (!(s_t > p.lower() && s_t < p.upper())) {
        throw PriceOutsideChannel("spot must lie strictly inside the channel");
    }
    double wp = (s_t - p.lower()) / (p.upper() - p.lower());
    return {wp, 1.0 - wp};
}

double call_delta(double s_t, const OptionSpec& spec, const ChannelParams& p) {
    p.validate();
    if (spec.tau < 0.0) throw NegativeTime("option tau must be nonnegative");
    if (!(s_t > p.lower() && s_t < p.upper())) {
        throw PriceOutsideChannel("spot must lie strictly inside the channel");
    }
    if (spec.strike <= p.lower()) return 1.0;
    if (spec.strike >= p.upper()) return 0.0;
    if (spec.tau == 0.0) return s_t > spec.strike ? 1.0 : 0.0;
    CallTerms t = call_terms(s_t, spec.strike, spec.tau, p);
    return ((p.upper() - spec.strike) * math::norm_cdf(t.d_plus) +
            (spec.strike - p.lower()) * math::norm_cdf(t.d_minus)) /
           (p.upper() - p.lower());
}

double put_delta(double s_t, const OptionSpec& spec, const ChannelParams& p) {
    return call_delta(s_t, spec, p) - 1.0;
}

} // namespace channelpx
