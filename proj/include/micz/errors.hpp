#pragma once

#include <stdexcept>
#include <string>

namespace micz {

enum class ErrorCode {
    InvalidParams,      // type invariant violated at a boundary
    DegenerateOrbit,    // L^2 - (L.A)^2 at or below the colliding-orbit slack
    OriginPoint,        // r = 0 passed where R^3* is required
    NonUnitDirection,   // boost/rotation direction not unit length
    WrongClass,         // operation defined for a different orbit class
    ClassBoundary,      // |a^2| too close to 0 for a stable canonicalization
    SignFlip,           // group action image has a0 <= 0 (spacelike a only)
    HyperbolicUnsupported,
    StepLimitExceeded,
    NearCollision,
    InvalidArgument,
};

class MiczError : public std::runtime_error {
public:
    MiczError(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code)
    {
    }

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

inline const char* to_string(ErrorCode c)
{
    switch (c) {
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::DegenerateOrbit: return "DegenerateOrbit";
    case ErrorCode::OriginPoint: return "OriginPoint";
    case ErrorCode::NonUnitDirection: return "NonUnitDirection";
    case ErrorCode::WrongClass: return "WrongClass";
    case ErrorCode::ClassBoundary: return "ClassBoundary";
    case ErrorCode::SignFlip: return "SignFlip";
    case ErrorCode::HyperbolicUnsupported: return "HyperbolicUnsupported";
    case ErrorCode::StepLimitExceeded: return "StepLimitExceeded";
    case ErrorCode::NearCollision: return "NearCollision";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "?";
}

} // namespace micz
