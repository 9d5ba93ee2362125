#pragma once

#include <complex>
#include <cstddef>
#include <string_view>
#include <vector>

namespace gcs::kernels {

// sum_i a[i] * conj(b[i]) over n elements; inputs are split re/im arrays.
using ConjDotFn = std::complex<double> (*)(const double* are, const double* aim,
                                           const double* bre, const double* bim,
                                           std::size_t n);

// For each of the npts unit-circle points z_j = (zre[j], zim[j]), evaluate
// P(z_j) = sum_{i=0}^{n-1} c_i z_j^i by Horner's rule and store |P(z_j)|^2
// in out[j].
using PowerEvalFn = void (*)(const double* cre, const double* cim, std::size_t n,
                             const double* zre, const double* zim,
                             double* out, std::size_t npts);

struct Backend {
  const char* name;
  ConjDotFn conj_dot;
  PowerEvalFn power_eval;
};

// Backends detected on this machine, ordered from baseline to fastest. The
// scalar backend is always present and is the reference the others are
// equivalence-tested against.
std::vector<const Backend*> available();

// The backend used by the correlation and envelope code. Defaults to the
// fastest available one; the GCS_KERNEL environment variable (checked once,
// at first use) or force() selects another by name.
const Backend& active();

// Selects a backend by name ("scalar", "avx2", "neon"). Returns false and
// changes nothing when the name is unknown or unavailable on this machine.
bool force(std::string_view name);

}  // namespace gcs::kernels
