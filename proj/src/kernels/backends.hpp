#pragma once

#include "gcs/kernels.hpp"

namespace gcs::kernels {

// Always present; the reference the vectorized paths are tested against.
const Backend& scalar_backend();

// Null when the backend was compiled out for this target or the running CPU
// lacks the required instructions.
const Backend* avx2_backend();
const Backend* neon_backend();

}  // namespace gcs::kernels
