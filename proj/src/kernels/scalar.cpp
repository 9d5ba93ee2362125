#include "backends.hpp"

namespace gcs::kernels {

namespace {

std::complex<double> conj_dot_scalar(const double* are, const double* aim,
                                     const double* bre, const double* bim,
                                     std::size_t n) {
  double sr = 0.0, si = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    // (ar + i*ai) * (br - i*bi)
    sr += are[i] * bre[i] + aim[i] * bim[i];
    si += aim[i] * bre[i] - are[i] * bim[i];
  }
  return {sr, si};
}

void power_eval_scalar(const double* cre, const double* cim, std::size_t n,
                       const double* zre, const double* zim, double* out,
                       std::size_t npts) {
  for (std::size_t j = 0; j < npts; ++j) {
    const double zr = zre[j], zi = zim[j];
    double ar = 0.0, ai = 0.0;
    for (std::size_t i = n; i-- > 0;) {
      const double t = ar * zr - ai * zi + cre[i];
      ai = ar * zi + ai * zr + cim[i];
      ar = t;
    }
    out[j] = ar * ar + ai * ai;
  }
}

constexpr Backend kScalar{"scalar", conj_dot_scalar, power_eval_scalar};

}  // namespace

const Backend& scalar_backend() { return kScalar; }

}  // namespace gcs::kernels
