#pragma once

#include <stdexcept>

namespace wsep {

// An internally-checked algebraic identity failed beyond tolerance. This is
// not a caller error: it signals a convention mismatch inside the library.
struct consistency_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace wsep
