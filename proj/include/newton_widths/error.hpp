#pragma once

#include <stdexcept>
#include <string>

namespace newton_widths {

enum class ErrorCode {
    Syntax,
    DimensionConflict,
    EmptyPolynomial,
    InvalidArgument,
    Unbounded,
    Infeasible,
    CapExceeded,
    Precondition,
    SupportViolation,
};

const char* to_string(ErrorCode code);

// Single exception type for the library; `code()` carries the machine-readable
// category the CLI maps onto exit codes.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace newton_widths
