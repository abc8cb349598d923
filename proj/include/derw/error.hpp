#pragma once

#include <stdexcept>

namespace derw {

// Base class of all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A word was combined with an object over a different alphabet.
struct AlphabetMismatch : Error {
  using Error::Error;
};

// A word that was required to be a factor never occurred in the scanned
// prefix.
struct NotAFactor : Error {
  using Error::Error;
};

// The scan budget ran out before the requested quantity was determined.
struct InsufficientData : Error {
  using Error::Error;
};

// A primitive morphism was required.
struct NotPrimitive : Error {
  using Error::Error;
};

}  // namespace derw
