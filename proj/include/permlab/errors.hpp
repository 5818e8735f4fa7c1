#pragma once

#include <stdexcept>
#include <string>

namespace permlab {

/// Base class for all errors thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A caller violated a documented precondition (bad prime, bad degree, ...).
struct InvalidArgument : Error {
    using Error::Error;
};

/// Malformed textual input (cycle notation, group-spec files, report text).
struct ParseError : Error {
    using Error::Error;
};

/// An operation would exceed a configured enumeration/lattice/degree cutoff.
struct CutoffExceeded : Error {
    using Error::Error;
};

/// An internal consistency check failed.  Seeing this means a bug in the
/// library (or a constructor whose structural assertions did not hold).
struct InternalCheck : Error {
    using Error::Error;
};

namespace detail {
inline void check(bool ok, const std::string& what) {
    if (!ok) throw InternalCheck("internal check failed: " + what);
}
}  // namespace detail

}  // namespace permlab
