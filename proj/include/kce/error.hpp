#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kce {

enum class ErrorCode {
    NotPrime,
    NotOneMod4,
    TooSmall,
    NarrowClassNotOne,
    NotGreaterThanOne,
    NotSymmetric,
    Ramified,
    NoSuchRoot,
    BadDenominator,
    RootMismatch,
    InvalidArgument,
    Internal,
};

std::string_view to_string(ErrorCode code);

// Domain failure carrying a machine-readable code. Internal means an
// invariant that should hold for every valid input was violated.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace kce
