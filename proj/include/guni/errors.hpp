#pragma once

#include <stdexcept>
#include <string>

namespace guni {

// Every failure the engine can signal.  Callers that need to branch on the
// failure kind should catch guni::Error and inspect code().
enum class ErrorCode {
    DivisionByZero,
    NotASubfield,
    CapExceeded,
    AmbientMismatch,
    DimensionMismatch,
    ZeroForm,
    SingularGenerator,
    NotAbelian,
    ActionDoesNotPreserveSurface,
    ScalarNotRootOfUnity,
    CoincidentPoints,
    LineOnSurface,
    PointNotOnSurface,
    NotAnInvolution,
    UnexpectedProfile,
    WrongOrder,
    UnexpectedCounts,
    HasFixedPoint,
    LineNotMapped,
    BadParameters,
    UnknownFamily,
    ParseError,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::NotASubfield: return "NotASubfield";
        case ErrorCode::CapExceeded: return "CapExceeded";
        case ErrorCode::AmbientMismatch: return "AmbientMismatch";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::ZeroForm: return "ZeroForm";
        case ErrorCode::SingularGenerator: return "SingularGenerator";
        case ErrorCode::NotAbelian: return "NotAbelian";
        case ErrorCode::ActionDoesNotPreserveSurface: return "ActionDoesNotPreserveSurface";
        case ErrorCode::ScalarNotRootOfUnity: return "ScalarNotRootOfUnity";
        case ErrorCode::CoincidentPoints: return "CoincidentPoints";
        case ErrorCode::LineOnSurface: return "LineOnSurface";
        case ErrorCode::PointNotOnSurface: return "PointNotOnSurface";
        case ErrorCode::NotAnInvolution: return "NotAnInvolution";
        case ErrorCode::UnexpectedProfile: return "UnexpectedProfile";
        case ErrorCode::WrongOrder: return "WrongOrder";
        case ErrorCode::UnexpectedCounts: return "UnexpectedCounts";
        case ErrorCode::HasFixedPoint: return "HasFixedPoint";
        case ErrorCode::LineNotMapped: return "LineNotMapped";
        case ErrorCode::BadParameters: return "BadParameters";
        case ErrorCode::UnknownFamily: return "UnknownFamily";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) {
    throw Error(code, std::string(error_code_name(code)) + ": " + what);
}

} // namespace guni
