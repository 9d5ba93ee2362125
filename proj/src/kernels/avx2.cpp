// Compiled with -mavx2 -mfma on x86-64 (see src/CMakeLists.txt); the runtime
// CPU check below keeps the backend unlisted on machines without them.
#include "backends.hpp"

#if defined(__AVX2__) && defined(__FMA__)
#include <immintrin.h>

namespace gcs::kernels {

namespace {

std::complex<double> conj_dot_avx2(const double* are, const double* aim,
                                   const double* bre, const double* bim,
                                   std::size_t n) {
  __m256d sr = _mm256_setzero_pd();
  __m256d si = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d ar = _mm256_loadu_pd(are + i);
    const __m256d ai = _mm256_loadu_pd(aim + i);
    const __m256d br = _mm256_loadu_pd(bre + i);
    const __m256d bi = _mm256_loadu_pd(bim + i);
    sr = _mm256_fmadd_pd(ar, br, sr);
    sr = _mm256_fmadd_pd(ai, bi, sr);
    si = _mm256_fmadd_pd(ai, br, si);
    si = _mm256_fnmadd_pd(ar, bi, si);
  }
  alignas(32) double rbuf[4], ibuf[4];
  _mm256_store_pd(rbuf, sr);
  _mm256_store_pd(ibuf, si);
  double r = (rbuf[0] + rbuf[1]) + (rbuf[2] + rbuf[3]);
  double im = (ibuf[0] + ibuf[1]) + (ibuf[2] + ibuf[3]);
  for (; i < n; ++i) {
    r += are[i] * bre[i] + aim[i] * bim[i];
    im += aim[i] * bre[i] - are[i] * bim[i];
  }
  return {r, im};
}

// Horner recurrence vectorized across grid points; four accumulator pairs in
// flight per iteration so the loop is throughput-bound rather than serialized
// on the fused-multiply-add latency chain.
void power_eval_avx2(const double* cre, const double* cim, std::size_t n,
                     const double* zre, const double* zim, double* out,
                     std::size_t npts) {
  std::size_t j = 0;
  for (; j + 16 <= npts; j += 16) {
    __m256d zr[4], zi[4], ar[4], ai[4];
    for (int u = 0; u < 4; ++u) {
      zr[u] = _mm256_loadu_pd(zre + j + 4 * u);
      zi[u] = _mm256_loadu_pd(zim + j + 4 * u);
      ar[u] = _mm256_setzero_pd();
      ai[u] = _mm256_setzero_pd();
    }
    for (std::size_t i = n; i-- > 0;) {
      const __m256d cr = _mm256_set1_pd(cre[i]);
      const __m256d ci = _mm256_set1_pd(cim[i]);
      for (int u = 0; u < 4; ++u) {
        const __m256d t = _mm256_fmadd_pd(ar[u], zr[u], _mm256_fnmadd_pd(ai[u], zi[u], cr));
        ai[u] = _mm256_fmadd_pd(ar[u], zi[u], _mm256_fmadd_pd(ai[u], zr[u], ci));
        ar[u] = t;
      }
    }
    for (int u = 0; u < 4; ++u) {
      const __m256d pw = _mm256_fmadd_pd(ar[u], ar[u], _mm256_mul_pd(ai[u], ai[u]));
      _mm256_storeu_pd(out + j + 4 * u, pw);
    }
  }
  for (; j + 4 <= npts; j += 4) {
    const __m256d zr = _mm256_loadu_pd(zre + j);
    const __m256d zi = _mm256_loadu_pd(zim + j);
    __m256d ar = _mm256_setzero_pd();
    __m256d ai = _mm256_setzero_pd();
    for (std::size_t i = n; i-- > 0;) {
      const __m256d cr = _mm256_set1_pd(cre[i]);
      const __m256d ci = _mm256_set1_pd(cim[i]);
      const __m256d t = _mm256_fmadd_pd(ar, zr, _mm256_fnmadd_pd(ai, zi, cr));
      ai = _mm256_fmadd_pd(ar, zi, _mm256_fmadd_pd(ai, zr, ci));
      ar = t;
    }
    _mm256_storeu_pd(out + j, _mm256_fmadd_pd(ar, ar, _mm256_mul_pd(ai, ai)));
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

constexpr Backend kAvx2{"avx2", conj_dot_avx2, power_eval_avx2};

}  // namespace

const Backend* avx2_backend() {
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return &kAvx2;
  return nullptr;
}

}  // namespace gcs::kernels

#else

namespace gcs::kernels {
const Backend* avx2_backend() { return nullptr; }
}  // namespace gcs::kernels

#endif
