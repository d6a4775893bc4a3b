#pragma once

#include "channelpx/pricing_types.hpp"

namespace channelpx {

// Geometric Brownian world between static attainable barriers. Boundary spots
// are allowed: contact is a settlement event, not an invalid state.
struct BarrierMarket {
    double spot;
    double sigma;   // GBM volatility
    double rate;    // risk-free rate r
    double carry;   // cost of carry b (= r for no dividends)
    double lower;   // S-
    double upper;   // S+

    // Throws InvalidMarket unless 0 < lower < upper, lower <= spot <= upper,
    // sigma > 0 and all fields are finite.
    void validate() const;
};

// Double-barrier knockout call/put: solution of the Black-Scholes-Merton PDE
// on (S-, S+) with absorbing barriers, evaluated by the doubly-infinite image
// series (flat barriers). Symmetric image pairs are added until the last pair
// falls below 1e-12 (hard cap 32 pairs -> SeriesNotConverged); for
// sigma^2*tau < 1e-4 the finite-difference solver takes over and the result
// is marked method = quadrature.
PriceResult dko_call(const BarrierMarket& mkt, double strike, double tau);
PriceResult dko_put(const BarrierMarket& mkt, double strike, double tau);

// American one-touch double-barrier binaries paying $1 at the first hit of
// the target barrier, knocked out at the other. Eigenfunction expansion in
// ln(S/S-)/ln(S+/S-) with the steady boundary-value solution split off in
// closed form; modes are added until the coefficient envelope falls below
// 1e-12 (hard cap 512 -> SeriesNotConverged), with the same small-tau PDE
// fallback as above.
PriceResult one_touch_upper(const BarrierMarket& mkt, double tau);
PriceResult one_touch_lower(const BarrierMarket& mkt, double tau);

// Channel options between attainable boundaries: knockout plus an immediate
// rebate at the automatic-exercise barrier,
//   call = dko_call + (S+ - K) * one_touch_upper
//   put  = dko_put  + (K - S-) * one_touch_lower.
PriceResult channel_call(const BarrierMarket& mkt, double strike, double tau);
PriceResult channel_put(const BarrierMarket& mkt, double strike, double tau);

// Vanilla generalized Black-Scholes with cost of carry (barrier-free limit).
double bs_call(double spot, double strike, double rate, double carry, double sigma,
               double tau);
double bs_put(double spot, double strike, double rate, double carry, double sigma,
              double tau);

} // namespace channelpx
