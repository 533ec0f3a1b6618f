#pragma once

#include <stdexcept>
#include <string>

namespace pfzero {

/// Every failure the toolkit reports is one of these kinds.  The CLI maps
/// them onto exit codes (see cli/job.hpp).
enum class ErrorKind {
    DegenerateInput,
    Inconsistent,
    DivisionByZeroPolynomial,
    UnsupportedDegree,
    NonIsolatedCritical,
    NotRegularAtInfinity,
    NotInIdeal,
    DecompositionFailed,
    DegenerateK,
    InvalidRays,
    InfeasibleClearance,
    PoleOnSegment,
    Inconclusive,
    ZeroOnContour,
    InvalidRho,
    NearCritical,
    NotCompactComponent,
    PathTooClose,
    StiffnessFailure,
    ParseError,
    Usage,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t offset, const std::string& what)
        : Error(ErrorKind::ParseError, what + " at offset " + std::to_string(offset)),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

} // namespace pfzero
