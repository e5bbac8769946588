#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tsurf {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : Error(what + " at position " + std::to_string(pos)), position(pos) {}
};

struct NotDivisible : Error {
    using Error::Error;
};

struct NotInvertible : Error {
    using Error::Error;
};

// implicit solve impossible: linear part is not a unit, or the system is not
// centred at the origin
struct NotSolvable : Error {
    using Error::Error;
};

struct TruncationTooShallow : Error {
    using Error::Error;
};

struct RingMismatch : Error {
    using Error::Error;
};

}  // namespace tsurf
