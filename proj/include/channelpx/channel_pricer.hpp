#pragma once

#include "channelpx/channel_model.hpp"
#include "channelpx/pricing_types.hpp"

#include <utility>

namespace channelpx {

// The two algebraically equivalent closed forms of the channel call.
// boundary_weights is the production path (no explicit cosh ratios);
// tanh_ratio is retained for verification.
enum class CallForm { boundary_weights, tanh_ratio };

// Closed-form European call on the tanh channel at zero risk-free rate.
// tau = 0 returns intrinsic value; strikes outside the channel settle to the
// certain-payoff limit and are flagged in the diagnostics instead of erroring.
PriceResult call_price(double s_t, const OptionSpec& spec, const ChannelParams& p);

// Put via parity: Vp = Vc - S_t + K.
PriceResult put_price(double s_t, const OptionSpec& spec, const ChannelParams& p);

// Raw evaluation of either algebraic form (channel-interior strike, tau > 0).
double call_price_form(double s_t, const OptionSpec& spec, const ChannelParams& p,
                       CallForm form);

// Large-maturity limit (S_t - S-)(S+ - K)/(S+ - S-): the probability of being
// pushed to the upper boundary times the payoff there.
double call_price_asymptotic(double s_t, double strike, const ChannelParams& p);

// (weight_plus, weight_minus): boundary-hitting probabilities at price s_t.
std::pair<double, double> hitting_weights(double s_t, const ChannelParams& p);

// Analytic dV/dS. The gaussian-pdf terms of the differentiated closed form
// cancel exactly, leaving [(S+ - K)N(d+) + (K - S-)N(d-)]/(S+ - S-).
double call_delta(double s_t, const OptionSpec& spec, const ChannelParams& p);
double put_delta(double s_t, const OptionSpec& spec, const ChannelParams& p);

} // namespace channelpx
