#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sfent {

enum class ErrorKind {
    NonConvergent,
    NonFinite,
    InvalidModelParameters,
    NegativeDistribution,
    DivergentNorm,
    NotConverged,
    ConfigError,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries one of the kinds above so the
// CLI can map it to a status marker without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::NonConvergent: return "NonConvergent";
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::InvalidModelParameters: return "InvalidModelParameters";
    case ErrorKind::NegativeDistribution: return "NegativeDistribution";
    case ErrorKind::DivergentNorm: return "DivergentNorm";
    case ErrorKind::NotConverged: return "NotConverged";
    case ErrorKind::ConfigError: return "ConfigError";
    }
    return "Unknown";
}

} // namespace sfent
