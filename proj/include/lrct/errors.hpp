#pragma once

#include <stdexcept>
#include <string>

namespace lrct {

// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A sequence that must be weakly decreasing is not.
struct NotDecreasing : Error {
    using Error::Error;
};

// Combined partition lengths exceed the ambient rank n.
struct LengthOverflow : Error {
    using Error::Error;
};

// Matrix/margin ranks disagree, or a spec is structurally inconsistent.
struct DimensionMismatch : Error {
    using Error::Error;
};

// A matrix of partitions that must be symmetric is not.
struct NotSymmetric : Error {
    using Error::Error;
};

// Malformed textual input.
struct ParseError : Error {
    using Error::Error;
};

// An operation's stated precondition does not hold.
struct PreconditionViolated : Error {
    using Error::Error;
};

// The table formulas are only valid for n >= stable threshold; callers see the
// threshold so they can report it or fall back to the oracle.
struct OutsideStableRange : Error {
    OutsideStableRange(std::string message, int threshold_in, int n_in)
        : Error(std::move(message)), threshold(threshold_in), n(n_in) {}

    int threshold;
    int n;
};

}  // namespace lrct
