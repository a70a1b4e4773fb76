#ifndef WDEG_ERRORS_HPP
#define WDEG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wdeg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed textual input. `line` is 1-based, 0 when not applicable.
struct ParseError : Error {
    ParseError(const std::string& what, int line)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line(line) {}
    int line;
};

/// Input is well-formed but violates a graph-level rule (self-loop, range).
struct ValidationError : Error {
    using Error::Error;
};

/// An object does not fit the graph it is used with (absent vertex, non-edge, bad cover).
struct StructuralError : Error {
    using Error::Error;
};

/// A documented precondition of an operation does not hold.
struct PreconditionError : Error {
    using Error::Error;
};

/// A configured size or work cap was exceeded.
struct ResourceError : Error {
    using Error::Error;
};

/// An internal invariant failed. Always a bug or a falsified theorem, never bad input.
struct InvariantError : Error {
    using Error::Error;
};

/// Empty graph where a nonempty one is needed.
struct DomainError : Error {
    using Error::Error;
};

#define WDEG_ENSURE(cond, msg)                                                          \
    do {                                                                                \
        if (!(cond))                                                                    \
            throw ::wdeg::InvariantError(std::string(msg) + " [" #cond "] at " __FILE__); \
    } while (0)

} // namespace wdeg

#endif
