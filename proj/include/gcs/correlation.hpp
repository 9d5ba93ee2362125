#pragma once

#include "gcs/ebf.hpp"

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace gcs {

// Aperiodic correlation values over shifts tau in [-(L-1), L-1], stored
// densely; at() returns 0 outside that range, matching the defining "0
// otherwise" clause.
struct CorrelationProfile {
  std::size_t L = 0;
  std::vector<std::complex<double>> values;  // index tau + (L - 1)

  std::complex<double> at(long long tau) const;
};

// Aperiodic cross-correlation of equal-length sequences at shift tau:
//   sum_{i} a_i * conj(b_{i+tau})  for 0 <= tau < L,
//   sum_{i} a_{i-tau} * conj(b_i)  for -L < tau < 0,
//   0 otherwise.
// Throws std::invalid_argument on length mismatch.
std::complex<double> accf(const ComplexSequence& a, const ComplexSequence& b,
                          long long tau);

// Autocorrelation: accf(a, a, tau).
std::complex<double> aacf(const ComplexSequence& a, long long tau);

// Sum of the members' autocorrelations at every shift. Throws on an empty
// set, ragged lengths, or zero-length members.
CorrelationProfile aacf_sum(const std::vector<ComplexSequence>& set);

// Result of the complementarity test: a set qualifies when the summed
// autocorrelation vanishes (within tol) at every nonzero shift.
struct GcsCheck {
  bool ok = false;
  long long worst_tau = 0;  // nonzero shift with the largest |sum|
  double worst_abs = 0.0;
  double peak = 0.0;        // |sum| at shift 0 (M*L for unit-modulus entries)
  double tol = 0.0;
};

GcsCheck is_gcs(const std::vector<ComplexSequence>& set, double tol);

// The default zero-test tolerance, 1e-9 * flock * length: it scales with the
// shift-0 peak, far above accumulated rounding at the sizes handled here.
double default_tolerance(std::size_t flock, std::size_t length);

// CSV rendering: header `tau,real,imag`, one row per shift from -(L-1) to
// L-1, fixed 12 decimal places, negative zero normalized to +0.
std::string profile_csv(const CorrelationProfile& profile);

}  // namespace gcs
