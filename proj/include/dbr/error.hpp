#ifndef DBR_ERROR_HPP
#define DBR_ERROR_HPP

#include <stdexcept>
#include <string>

#include <json.hpp>

namespace dbr {

enum class ErrorKind {
    MalformedLine,
    LoopEdge,
    Disconnected,
    NotBipartite,
    NotSemiregular,
    AmbiguousClustering,
    InvariantViolation,
    NonPositiveEntry,
    DegenerateMeasure,
    ZeroAtLambda,
    SupportMismatch,
    UnequalEccentricities,
    CheckFailed,
    RouteDisagreement,
    UnknownFamily,
    BadParams,
    FixtureGateFailed,
    BadArgument,
};

const char* to_string(ErrorKind kind);

/// Library-wide error type. `detail` carries structured witness data
/// (offending line, odd cycle, residuals, ...) for reports and tests.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message,
          nlohmann::json detail = nlohmann::json::object())
        : std::runtime_error(std::string(to_string(kind)) + ": " + message),
          kind_(kind),
          detail_(std::move(detail)) {}

    ErrorKind kind() const { return kind_; }
    const nlohmann::json& detail() const { return detail_; }

private:
    ErrorKind kind_;
    nlohmann::json detail_;
};

inline const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::MalformedLine: return "MalformedLine";
        case ErrorKind::LoopEdge: return "LoopEdge";
        case ErrorKind::Disconnected: return "Disconnected";
        case ErrorKind::NotBipartite: return "NotBipartite";
        case ErrorKind::NotSemiregular: return "NotSemiregular";
        case ErrorKind::AmbiguousClustering: return "AmbiguousClustering";
        case ErrorKind::InvariantViolation: return "InvariantViolation";
        case ErrorKind::NonPositiveEntry: return "NonPositiveEntry";
        case ErrorKind::DegenerateMeasure: return "DegenerateMeasure";
        case ErrorKind::ZeroAtLambda: return "ZeroAtLambda";
        case ErrorKind::SupportMismatch: return "SupportMismatch";
        case ErrorKind::UnequalEccentricities: return "UnequalEccentricities";
        case ErrorKind::CheckFailed: return "CheckFailed";
        case ErrorKind::RouteDisagreement: return "RouteDisagreement";
        case ErrorKind::UnknownFamily: return "UnknownFamily";
        case ErrorKind::BadParams: return "BadParams";
        case ErrorKind::FixtureGateFailed: return "FixtureGateFailed";
        case ErrorKind::BadArgument: return "BadArgument";
    }
    return "Error";
}

}  // namespace dbr

#endif  // DBR_ERROR_HPP
