#pragma once

#include <stdexcept>
#include <string>

namespace horn {

enum class ErrorCode {
    ZeroVector,
    NonConvergence,
    SingularMatrix,
    NotUnitary,
    NotElliptic,
    NullPolarVector,
    NotScalarProduct,
    NoSolution,
    BisectionFailure,
    DegenerateAngle,
    Unresolvable,
    Degenerate,
    ParseError,
};

const char* error_name(ErrorCode code);

class HornError : public std::runtime_error {
public:
    HornError(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

}  // namespace horn
