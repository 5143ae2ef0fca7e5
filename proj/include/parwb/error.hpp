#ifndef PARWB_ERROR_HPP_
#define PARWB_ERROR_HPP_

#include <stdexcept>

namespace parwb {

// A construction or sweep would exceed the configured size cap.
struct SizeCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed user input: bad JSON, bad table shape, out-of-range index.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A computation contradicted a structural guarantee. Signals a bug in the
// workbench itself, never a property of the input.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace parwb

#endif  // PARWB_ERROR_HPP_
