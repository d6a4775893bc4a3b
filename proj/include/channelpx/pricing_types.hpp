#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace channelpx {

enum class OptionKind { call, put };

struct OptionSpec {
    double strike;
    double tau;                         // time to maturity T - t
    OptionKind kind = OptionKind::call;
};

enum class PricingMethod { closed_form, quadrature, monte_carlo, series };

const char* to_string(PricingMethod m);

// Method-specific diagnostics; only fields relevant to the producing path
// are populated.
struct Diagnostics {
    std::optional<long> series_terms;
    std::optional<double> truncation_bound;
    std::optional<double> std_error;
    std::optional<std::int64_t> paths_used;
    std::optional<long> function_evals;
    std::optional<double> error_estimate;
    std::optional<bool> settled;             // spot started on a barrier
    std::optional<std::string> strike_flag;  // strike clamped outside the channel
};

struct PriceResult {
    double price;
    PricingMethod method;
    Diagnostics diag;
};

} // namespace channelpx
