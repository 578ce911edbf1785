// Error taxonomy shared across the library.  The C API maps each type to a
// status code; messages are written to be shown to the user as-is.
#pragma once

#include <stdexcept>

namespace pvopt {

// Files missing or unreadable.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed JSON or CSV syntax.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Well-formed input rejected on content: schema, ranges, coverage, overlaps.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The optimizer never scored a penalty-free point.
struct NoFeasibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace pvopt
