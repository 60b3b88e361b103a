#pragma once

#include <stdexcept>
#include <string>

namespace tropic {

/// Machine-readable failure categories. The names double as the "error"
/// field of CLI reports, so keep them stable.
enum class ErrorCode {
    ZeroDirection,
    DimMismatch,
    NotInSupport,
    TooLargeForFacets,
    NoSuchVertex,
    NoSuchEdge,
    DegenerateEdge,
    InvalidCurve,
    InvalidFan,
    Unbalanced,
    RecessionNotSupported,
    NonIntegralRatio,
    CertificateInconsistency,
    TypeMismatch,
    TooLargeForHilbert,
    GenusNotOne,
    ParseError,
};

inline const char* to_string(ErrorCode code)
{
    switch (code) {
        case ErrorCode::ZeroDirection: return "ZeroDirection";
        case ErrorCode::DimMismatch: return "DimMismatch";
        case ErrorCode::NotInSupport: return "NotInSupport";
        case ErrorCode::TooLargeForFacets: return "TooLargeForFacets";
        case ErrorCode::NoSuchVertex: return "NoSuchVertex";
        case ErrorCode::NoSuchEdge: return "NoSuchEdge";
        case ErrorCode::DegenerateEdge: return "DegenerateEdge";
        case ErrorCode::InvalidCurve: return "InvalidCurve";
        case ErrorCode::InvalidFan: return "InvalidFan";
        case ErrorCode::Unbalanced: return "Unbalanced";
        case ErrorCode::RecessionNotSupported: return "RecessionNotSupported";
        case ErrorCode::NonIntegralRatio: return "NonIntegralRatio";
        case ErrorCode::CertificateInconsistency: return "CertificateInconsistency";
        case ErrorCode::TypeMismatch: return "TypeMismatch";
        case ErrorCode::TooLargeForHilbert: return "TooLargeForHilbert";
        case ErrorCode::GenusNotOne: return "GenusNotOne";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

class TropicError : public std::runtime_error {
public:
    TropicError(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace tropic
