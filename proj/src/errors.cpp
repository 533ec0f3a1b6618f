#include "pfzero/errors.hpp"

namespace pfzero {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::Inconsistent: return "Inconsistent";
    case ErrorKind::DivisionByZeroPolynomial: return "DivisionByZeroPolynomial";
    case ErrorKind::UnsupportedDegree: return "UnsupportedDegree";
    case ErrorKind::NonIsolatedCritical: return "NonIsolatedCritical";
    case ErrorKind::NotRegularAtInfinity: return "NotRegularAtInfinity";
    case ErrorKind::NotInIdeal: return "NotInIdeal";
    case ErrorKind::DecompositionFailed: return "DecompositionFailed";
    case ErrorKind::DegenerateK: return "DegenerateK";
    case ErrorKind::InvalidRays: return "InvalidRays";
    case ErrorKind::InfeasibleClearance: return "InfeasibleClearance";
    case ErrorKind::PoleOnSegment: return "PoleOnSegment";
    case ErrorKind::Inconclusive: return "Inconclusive";
    case ErrorKind::ZeroOnContour: return "ZeroOnContour";
    case ErrorKind::InvalidRho: return "InvalidRho";
    case ErrorKind::NearCritical: return "NearCritical";
    case ErrorKind::NotCompactComponent: return "NotCompactComponent";
    case ErrorKind::PathTooClose: return "PathTooClose";
    case ErrorKind::StiffnessFailure: return "StiffnessFailure";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Usage: return "Usage";
    }
    return "Unknown";
}

} // namespace pfzero
