#pragma once

#include <stdexcept>
#include <string>

namespace fracdim {

// Base for all domain errors. Input and parameter problems derive from this;
// internal arithmetic inconsistencies use std::logic_error instead.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ParameterOutOfRange : Error {
    using Error::Error;
};

struct NonIncreasingSchedule : Error {
    using Error::Error;
};

struct GapConditionViolated : Error {
    GapConditionViolated(const std::string& what, int n) : Error(what), index(n) {}
    int index;  // offending gap k_{n+1} - k_n
};

struct DepthExceeded : Error {
    using Error::Error;
};

struct CapExceeded : Error {
    using Error::Error;
};

struct LevelExceedsTruncation : Error {
    using Error::Error;
};

struct OutOfEnvelopeRange : Error {
    using Error::Error;
};

struct ScheduleMismatch : Error {
    using Error::Error;
};

struct ConstraintViolated : Error {
    using Error::Error;
};

struct DegenerateLambda : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace fracdim
