#pragma once

#include <stdexcept>
#include <string>

namespace mixc1 {

enum class ErrorCode {
    DivisionByZero,
    BothZero,
    DegreeOverflow,
    Parse,
    EdgeMismatch,
    IrregularOnInterface,
    IrregularGluing,
    DegenerateEdge,
    WrongCase,
    SubcaseExhausted,
    InternalInconsistency,
    NotDivisible,
    DegreeExceeded,
    FormulaMismatch,
    TooFewDofs,
    SingularCollocation,
    DegreeMismatch,
    MixedOrientation,
    InvalidArgument,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace mixc1
