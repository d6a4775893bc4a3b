#pragma once

#include <functional>

namespace channelpx {

// Tanh-channel model with unattainable boundaries. The price map
// S = A + B*tanh(nu*(x - x_star)) confines prices to the open band
// (A - B, A + B); the state X follows dX = mu(X) dt + sigma dW with the
// matching mean-repelling drift, which makes the price itself a bounded
// martingale at zero rate.
struct ChannelParams {
    double center_a;          // A, channel center (currency)
    double half_width_b;      // B, half-width (currency)
    double nu;                // channel stiffness (1/state)
    double sigma;             // state volatility (1/sqrt(time))
    double x_star = 0.0;      // channel center in state space

    double lower() const { return center_a - half_width_b; }  // S-
    double upper() const { return center_a + half_width_b; }  // S+

    // Throws InvalidParams unless A > B > 0, nu > 0, sigma > 0.
    void validate() const;
};

struct GaussianComponent {
    double mean;
    double variance;
};

// The transition density as a two-Gaussian mixture: components drift apart
// at rate mu_star = sigma^2*nu and are weighted by the boundary-hitting
// probabilities implied by the current price.
struct MixtureDecomposition {
    double weight_plus;
    double weight_minus;
    double mu_star;
    GaussianComponent gaussian_plus;
    GaussianComponent gaussian_minus;
};

// Drift nu*sigma^2*tanh(nu*(x - x_star)); odd about x_star, bounded by
// nu*sigma^2 in absolute value.
double drift_mu(double x, const ChannelParams& p);

// Price map A + B*tanh(nu*(x - x_star)); strictly increasing, range (S-, S+).
double s_of_x(double x, const ChannelParams& p);

// Inverse price map. Throws PriceOutsideChannel unless S- < s < S+ strictly
// (the boundaries are unattainable, so they are rejected rather than clamped).
double x_of_s(double s, const ChannelParams& p);

// Transition density of the state after elapsed time tau > 0. Evaluated in
// log space so the cosh ratio survives nu*|x| far beyond double overflow.
double log_density(double x, double x0, double tau, const ChannelParams& p);
double density(double x, double x0, double tau, const ChannelParams& p);

// Splits the density into its two Gaussian components. The current price is
// derived from x0 internally so the weights are always consistent.
MixtureDecomposition mixture_decomposition(double x0, double tau, const ChannelParams& p);

// Time-independent bounded martingale for an arbitrary drift, built by
// nested adaptive quadrature of exp(-(2/sigma^2) * int_0^u mu). Normalized so
// w(x_ref) = 0 and w(x_ref + 1) = 1.
double zero_mode_martingale(const std::function<double(double)>& mu, double x,
                            double x_ref, const ChannelParams& p);

// Separated time-inhomogeneous martingale
//   exp(sign*lambda*(x - x_star)) / cosh(nu*(x - x_star)) * exp(-rho*sigma^2*t/2)
// with lambda = sqrt(rho + nu^2). Requires rho > 0 (NonpositiveRho otherwise)
// and sign in {-1, +1}.
double exp_martingale(double rho, int sign, double x, double t, const ChannelParams& p);

// Drift that keeps the price boundaries static under a nonzero rate:
// r*phi/phi' + drift_mu with phi the tanh price map. Reduces exactly to
// drift_mu at r = 0 and diverges as |x| -> infinity for r != 0.
double drift_nonzero_rate(double r, double x, const ChannelParams& p);

} // namespace channelpx
