#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace heis {

enum class ErrorCode {
    InvalidArgument,
    StepUnderflow,
    NotArclength,
    DegenerateCurve,
    DegeneratePoint,
    SingularPoint,
    NoSingularCurve,
    OnSingularLocus,
    NonFinite,
    OrientationUnset,
    StepTooSmall,
    NotApplicable,
    UnknownSurface,
    ParseError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so that
/// front-ends can map it to an exit status without string matching.
class GeometryError : public std::runtime_error {
public:
    GeometryError(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
    {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::StepUnderflow: return "StepUnderflow";
    case ErrorCode::NotArclength: return "NotArclength";
    case ErrorCode::DegenerateCurve: return "DegenerateCurve";
    case ErrorCode::DegeneratePoint: return "DegeneratePoint";
    case ErrorCode::SingularPoint: return "SingularPoint";
    case ErrorCode::NoSingularCurve: return "NoSingularCurve";
    case ErrorCode::OnSingularLocus: return "OnSingularLocus";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::OrientationUnset: return "OrientationUnset";
    case ErrorCode::StepTooSmall: return "StepTooSmall";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::UnknownSurface: return "UnknownSurface";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

[[noreturn]] inline void fail(ErrorCode code, const std::string& what)
{
    throw GeometryError(code, what);
}

} // namespace heis
