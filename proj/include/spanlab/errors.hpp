#pragma once

#include <stdexcept>
#include <string>

namespace spanlab {

// Base class for all errors raised by this library. Everything thrown here
// derives from std::runtime_error so callers may catch either type.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A numeric argument lies outside the range an operation supports.
struct RangeError : Error {
    using Error::Error;
};

// A builder's arithmetic hypothesis does not hold for the given arguments.
struct HypothesisError : Error {
    using Error::Error;
};

// The requested instance collapses to a smaller structure than the builder
// is meant to produce.
struct DegenerateError : Error {
    using Error::Error;
};

// A divisibility requirement between arguments fails.
struct DivisibilityError : Error {
    using Error::Error;
};

// A congruence requirement on an argument fails.
struct CongruenceError : Error {
    using Error::Error;
};

// An operation defined only for rank-2 groups was called on a cyclic group.
struct RankError : Error {
    using Error::Error;
};

// Certificate generation was requested for a set that does not cover the
// whole group at the given radius.
struct NotSpanningError : Error {
    using Error::Error;
};

// An exhaustive search would exceed its configured size cap.
struct CapExceededError : Error {
    using Error::Error;
};

}  // namespace spanlab
