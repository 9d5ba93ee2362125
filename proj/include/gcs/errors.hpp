#pragma once

#include <stdexcept>

namespace gcs {

// Malformed input file or text; the message carries line/field context.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Resource or search-space refusal (work beyond a documented internal bound).
struct BoundError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace gcs
