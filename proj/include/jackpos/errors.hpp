#pragma once

#include <stdexcept>
#include <string>

namespace jackpos {

/// Base class of every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  using Error::Error;
};

struct DenominatorVanishes : Error {
  DenominatorVanishes() : Error("denominator vanishes identically") {}
};

/// Raised by exact division; `remainder` holds the rendered remainder witness.
struct NotDivisible : Error {
  std::string remainder;
  explicit NotDivisible(std::string rem)
      : Error("not divisible, remainder " + rem), remainder(std::move(rem)) {}
};

struct WeightMismatch : Error {
  using Error::Error;
};
struct WeightLimitExceeded : Error {
  using Error::Error;
};
struct InvalidMove : Error {
  using Error::Error;
};
struct NotContained : Error {
  using Error::Error;
};
struct MuHasOnes : Error {
  using Error::Error;
};
struct MuTooHeavy : Error {
  using Error::Error;
};
struct RhoTooHeavy : Error {
  using Error::Error;
};
struct DegreeBoundViolated : Error {
  using Error::Error;
};
struct DivisionResidue : Error {
  using Error::Error;
};

}  // namespace jackpos
