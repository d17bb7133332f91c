#pragma once

#include <stdexcept>
#include <string>

namespace dewet {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidCurveError : Error {
    using Error::Error;
};

struct ZeroSegmentError : Error {
    using Error::Error;
};

struct FieldMismatchError : Error {
    using Error::Error;
};

struct AssumptionViolatedError : Error {
    using Error::Error;
};

struct SolveFailedError : Error {
    using Error::Error;
};

struct ContactCrossingError : Error {
    using Error::Error;
};

struct NotSimpleError : Error {
    using Error::Error;
};

struct NonPositiveError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

struct InvalidArgumentError : Error {
    using Error::Error;
};

}  // namespace dewet
