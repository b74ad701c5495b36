#pragma once

#include <stdexcept>
#include <string>

namespace blf {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Violated construction invariant or bad operation argument: determinant
// != 1, non-primitive curve vector, move index out of range.
struct DomainError : Error {
    using Error::Error;
};

// Input outside the certifier's scope (fiber genus != 1).
struct UnsupportedInput : Error {
    using Error::Error;
};

// An operation was invoked outside its stated precondition.
struct ContractViolation : Error {
    using Error::Error;
};

// An internal consistency check failed; indicates a bug, not bad input.
struct InvariantViolation : Error {
    using Error::Error;
};

// Structurally broken data fed to a checker, e.g. a Z2-homology vector
// whose length is not 2g.
struct MalformedInput : Error {
    using Error::Error;
};

// Positioned syntax or semantic error in a fibration-description file.
// Lines and columns are 1-based.
struct ParseError : Error {
    ParseError(long long line_, long long col_, const std::string& message)
        : Error("line " + std::to_string(line_) + ", column " +
                std::to_string(col_) + ": " + message),
          line(line_),
          col(col_) {}

    long long line;
    long long col;
};

}  // namespace blf
