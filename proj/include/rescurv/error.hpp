#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rescurv {

enum class ErrorCode {
    DuplicateEdge,
    SelfLoop,
    NonpositiveResistance,
    IndexOutOfRange,
    NoSuchEdge,
    Disconnected,
    DisconnectedTerminals,
    ConvergenceFailure,
    DimensionMismatch,
    NotAPathProduct,
    BackendNotExact,
    SizeLimitExceeded,
    InvalidArgument,
    ParseError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI's exit-code mapping) can branch without parsing text.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::NonpositiveResistance: return "NonpositiveResistance";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NoSuchEdge: return "NoSuchEdge";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::DisconnectedTerminals: return "DisconnectedTerminals";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotAPathProduct: return "NotAPathProduct";
    case ErrorCode::BackendNotExact: return "BackendNotExact";
    case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

} // namespace rescurv
