#pragma once

#include <stdexcept>
#include <string>

namespace susp7 {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input rejected before any computation ran.
struct ValidationError : Error {
  using Error::Error;
};
struct ParseError : ValidationError {
  using ValidationError::ValidationError;
};
struct NegativeRank : ValidationError {
  using ValidationError::ValidationError;
};
struct WuLengthMismatch : ValidationError {
  using ValidationError::ValidationError;
};

struct MissingSummand : Error {
  using Error::Error;
};
struct UnsuspendableAtom : Error {
  using Error::Error;
};
struct IllegalDirection : Error {
  using Error::Error;
};
struct OutOfTable : Error {
  using Error::Error;
};
struct NeedsDoubleSuspension : Error {
  using Error::Error;
};
struct BadRange : Error {
  using Error::Error;
};

}  // namespace susp7
