#pragma once

#include <stdexcept>
#include <string>

namespace rfg {

// Base class for all library errors. Subclasses map 1:1 onto CLI exit codes.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input: unknown symbols, bad literals, alphabet mismatches.
struct InputError : Error {
  using Error::Error;
};

// Valid syntax but out-of-range parameters or violated preconditions.
struct DomainError : Error {
  using Error::Error;
};

// A configured budget was exceeded; the message names the budget.
struct ResourceError : Error {
  using Error::Error;
};

// The requested computation is not supported for this input
// (e.g. word problem in a presentation without a certificate).
struct UnsupportedError : Error {
  using Error::Error;
};

// A bounded search ran out of candidates.
struct SearchExhaustedError : Error {
  using Error::Error;
};

// Subgroup membership required but not satisfied.
struct MembershipError : Error {
  using Error::Error;
};

// An internal construction broke one of its own guarantees; always a bug.
struct ConstructionError : Error {
  using Error::Error;
};

// Unreachable state; always a bug.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace rfg
