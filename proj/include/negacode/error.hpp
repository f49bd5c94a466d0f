#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace negacode {

// Stable error codes; the CLI maps them 1:1 onto machine-readable JSON.
enum class Errc {
    CompositeCharacteristic,
    SizeExceeded,
    DivisionByZero,
    ContextMismatch,
    NotSemisimple,
    NotAUnit,
    EvenInput,
    WrongSign,
    EvenLength,
    LengthMismatch,
    WrongKind,
    CapExceeded,
    BadShape,
    DomainError,
    DeltaTooLarge,
    InternalCoefficientLeak,
    BudgetExceeded,
    EmptyCode,
    UsageError,
    Internal,
};

std::string_view errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool cond, Errc code, const std::string& msg) {
    if (!cond) fail(code, msg);
}

// Invariant checks that indicate a bug in this library rather than bad input.
inline void internal_check(bool cond, const std::string& msg) {
    if (!cond) fail(Errc::Internal, "invariant violated: " + msg);
}

}  // namespace negacode
