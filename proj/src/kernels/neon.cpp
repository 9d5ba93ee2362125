#include "backends.hpp"

#if defined(__aarch64__)
#include <arm_neon.h>

namespace gcs::kernels {

namespace {

std::complex<double> conj_dot_neon(const double* are, const double* aim,
                                   const double* bre, const double* bim,
                                   std::size_t n) {
  float64x2_t sr = vdupq_n_f64(0.0);
  float64x2_t si = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t ar = vld1q_f64(are + i);
    const float64x2_t ai = vld1q_f64(aim + i);
    const float64x2_t br = vld1q_f64(bre + i);
    const float64x2_t bi = vld1q_f64(bim + i);
    sr = vfmaq_f64(sr, ar, br);
    sr = vfmaq_f64(sr, ai, bi);
    si = vfmaq_f64(si, ai, br);
    si = vfmsq_f64(si, ar, bi);
  }
  double r = vaddvq_f64(sr);
  double im = vaddvq_f64(si);
  for (; i < n; ++i) {
    r += are[i] * bre[i] + aim[i] * bim[i];
    im += aim[i] * bre[i] - are[i] * bim[i];
  }
  return {r, im};
}

// Same accumulator-interleaving scheme as the AVX2 path: four two-lane
// accumulator pairs per iteration to hide the fused-multiply-add latency.
void power_eval_neon(const double* cre, const double* cim, std::size_t n,
                     const double* zre, const double* zim, double* out,
                     std::size_t npts) {
  std::size_t j = 0;
  for (; j + 8 <= npts; j += 8) {
    float64x2_t zr[4], zi[4], ar[4], ai[4];
    for (int u = 0; u < 4; ++u) {
      zr[u] = vld1q_f64(zre + j + 2 * u);
      zi[u] = vld1q_f64(zim + j + 2 * u);
      ar[u] = vdupq_n_f64(0.0);
      ai[u] = vdupq_n_f64(0.0);
    }
    for (std::size_t i = n; i-- > 0;) {
      const float64x2_t cr = vdupq_n_f64(cre[i]);
      const float64x2_t ci = vdupq_n_f64(cim[i]);
      for (int u = 0; u < 4; ++u) {
        const float64x2_t t = vfmaq_f64(vfmsq_f64(cr, ai[u], zi[u]), ar[u], zr[u]);
        ai[u] = vfmaq_f64(vfmaq_f64(ci, ai[u], zr[u]), ar[u], zi[u]);
        ar[u] = t;
      }
    }
    for (int u = 0; u < 4; ++u)
      vst1q_f64(out + j + 2 * u, vfmaq_f64(vmulq_f64(ai[u], ai[u]), ar[u], ar[u]));
  }
  for (; j < npts; ++j) {
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

constexpr Backend kNeon{"neon", conj_dot_neon, power_eval_neon};

}  // namespace

const Backend* neon_backend() { return &kNeon; }

}  // namespace gcs::kernels

#else

namespace gcs::kernels {
const Backend* neon_backend() { return nullptr; }
}  // namespace gcs::kernels

#endif
