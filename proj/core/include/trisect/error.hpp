#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace trisect {

enum class ErrorCode {
    InvalidArgument,
    DegeneratePoint,
    ConcentricCircles,
    NoIntersection,
    AngleOutOfRange,
    ParameterOutOfRange,
    InvalidSampleCount,
    MaxIterationsExceeded,
    MismatchDetected,
};

[[nodiscard]] std::string_view to_string(ErrorCode code) noexcept;

/// Base exception for every failure raised by the library. The code is the
/// stable, machine-checkable part; the message is for humans.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace trisect
