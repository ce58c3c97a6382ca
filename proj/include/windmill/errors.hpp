#pragma once

#include <stdexcept>
#include <string>

namespace windmill {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact arithmetic left the representable range.  Raised instead of ever
// letting an intermediate wrap.
struct overflow_error : error {
  using error::error;
};

// A triple failed to land in any region, or a transform produced a
// non-positive coordinate.  Either one means the partition is broken and
// certificate construction must stop.
struct classification_error : error {
  using error::error;
};

// The prime is = 2 (mod 3): no representation p = a^2 + ab + b^2 exists.
struct not_admissible : error {
  using error::error;
};

// A condition that is provably unreachable for valid input was reached.
struct internal_check_failure : error {
  using error::error;
};

}  // namespace windmill
