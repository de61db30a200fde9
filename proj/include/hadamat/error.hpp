#pragma once

#include <stdexcept>
#include <string>

namespace hadamat {

enum class ErrorCode {
    InvalidArgument,
    UnsupportedOrder,
    OrderMismatch,
    DimensionMismatch,
    DomainError,
    NotRepresentable,
    ParseError,
    BudgetExceeded,
    UnknownName,
    ExceedsMaximum,
    ComplexityGuard,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

} // namespace hadamat
