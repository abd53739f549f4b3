#ifndef DYNLABEL_ERRORS_HPP
#define DYNLABEL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dynlabel {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An id that is already present was inserted again.
struct DuplicateIdError : Error {
  using Error::Error;
};

// An id that is not present was deleted or looked up.
struct UnknownIdError : Error {
  using Error::Error;
};

// A shape's grid point falls outside the configured frame.
struct OutOfFrameError : Error {
  using Error::Error;
};

// The exact solver was asked to handle more items than its configured cap.
struct CapExceededError : Error {
  using Error::Error;
};

// A file (instance, trace, records) violates its format.
struct FormatError : Error {
  using Error::Error;
};

// A trace event cannot be applied (e.g. delete from an empty set at generation time).
struct InfeasibleTraceError : Error {
  using Error::Error;
};

// An algorithm name (or algorithm/shape-mode combination) is not recognised.
struct UnknownAlgoError : Error {
  using Error::Error;
};

// An internal structural bound that the update procedures guarantee was violated.
// Seeing this means a bug, not bad input.
struct InvariantError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace dynlabel

#endif
