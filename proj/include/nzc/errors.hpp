#pragma once

#include <stdexcept>
#include <string>

namespace nzc {

// Base type for all library errors. The CLI maps CapExceeded/DimensionCap
// to exit code 3 and every other Error to exit code 2.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// q is not a prime power (or q < 2).
struct NotPrimePower : Error {
    using Error::Error;
};

// An instance-size cap was exceeded; the message names the cap.
struct CapExceeded : Error {
    using Error::Error;
};

// Dimension outside the supported mask width.
struct DimensionCap : CapExceeded {
    using CapExceeded::CapExceeded;
};

// Multiplicative inverse of zero requested.
struct ZeroInverse : Error {
    using Error::Error;
};

// The null vector appeared where a graph vertex was required.
struct NullVector : Error {
    using Error::Error;
};

// A basis matrix failed the rank-n invariant.
struct SingularBasis : Error {
    using Error::Error;
};

// Support size outside [1, n].
struct BadSupportSize : Error {
    using Error::Error;
};

// Isomorphism query across different field orders.
struct FieldMismatch : Error {
    using Error::Error;
};

} // namespace nzc
