#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hybrix {

// All library errors derive from Error so CLI/callers can catch one type.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SyntaxError : Error {
    std::size_t position;
    SyntaxError(std::size_t pos, const std::string& what)
        : Error("syntax error at " + std::to_string(pos) + ": " + what), position(pos) {}
};

struct LanguageError : Error {
    using Error::Error;
};

struct UnboundSymbol : Error {
    std::string symbol;
    explicit UnboundSymbol(const std::string& name)
        : Error("unbound symbol: " + name), symbol(name) {}
};

struct AlgebraMismatch : Error {
    using Error::Error;
};

struct KindError : Error {
    using Error::Error;
};

struct NotDesignated : Error {
    using Error::Error;
};

struct NotAtom : Error {
    using Error::Error;
};

struct NotClosed : Error {
    using Error::Error;
};

struct FrameInvariantError : Error {
    using Error::Error;
};

struct BoxDViolation : Error {
    using Error::Error;
};

struct SchemaUnchecked : Error {
    using Error::Error;
};

struct NotRefuted : Error {
    using Error::Error;
};

struct NoConstantAvailable : Error {
    using Error::Error;
};

struct BudgetExceeded : Error {
    using Error::Error;
};

struct InternalInvariantBreach : Error {
    using Error::Error;
};

struct InputError : Error {
    using Error::Error;
};

}  // namespace hybrix
