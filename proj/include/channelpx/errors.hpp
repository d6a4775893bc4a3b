#pragma once

#include <stdexcept>
#include <string>

namespace channelpx {

// Base for all domain errors. `code()` is the stable machine-readable
// identifier surfaced by the CLI; `what()` carries the human message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

class InvalidParams : public Error {
public:
    explicit InvalidParams(const std::string& m) : Error("invalid_params", m) {}
};

class PriceOutsideChannel : public Error {
public:
    explicit PriceOutsideChannel(const std::string& m) : Error("price_outside_channel", m) {}
};

class NonpositiveTime : public Error {
public:
    explicit NonpositiveTime(const std::string& m) : Error("nonpositive_time", m) {}
};

class NegativeTime : public Error {
public:
    explicit NegativeTime(const std::string& m) : Error("negative_time", m) {}
};

class NonpositiveRho : public Error {
public:
    explicit NonpositiveRho(const std::string& m) : Error("nonpositive_rho", m) {}
};

class QuadratureFailure : public Error {
public:
    explicit QuadratureFailure(const std::string& m) : Error("quadrature_failure", m) {}
};

class SeriesNotConverged : public Error {
public:
    explicit SeriesNotConverged(const std::string& m) : Error("series_not_converged", m) {}
};

class GridTooCoarse : public Error {
public:
    explicit GridTooCoarse(const std::string& m) : Error("grid_too_coarse", m) {}
};

class DegenerateBranch : public Error {
public:
    explicit DegenerateBranch(const std::string& m) : Error("degenerate_branch", m) {}
};

class InvalidStrike : public Error {
public:
    explicit InvalidStrike(const std::string& m) : Error("invalid_strike", m) {}
};

class InvalidMarket : public Error {
public:
    explicit InvalidMarket(const std::string& m) : Error("invalid_market", m) {}
};

class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& m) : Error("config_error", m) {}
};

} // namespace channelpx
