#pragma once

#include <stdexcept>
#include <string>

namespace motives {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ShapeMismatch : Error {
    using Error::Error;
};

struct SingularMatrix : Error {
    using Error::Error;
};

struct RankDeficient : Error {
    using Error::Error;
};

struct NotIdempotent : Error {
    using Error::Error;
};

struct NotOrthogonalizable : Error {
    using Error::Error;
};

struct NotFullyAlgebraic : Error {
    using Error::Error;
};

struct NotComputed : Error {
    using Error::Error;
};

/// Malformed input; `where` is a path into the offending document
/// (e.g. "variety.pairings[2]") so scripts can locate the problem.
struct ParseError : Error {
    ParseError(const std::string& msg, std::string where_)
        : Error(msg + " (at " + where_ + ")"), where(std::move(where_)) {}
    std::string where;
};

}  // namespace motives
