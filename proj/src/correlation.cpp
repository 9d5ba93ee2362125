#include "gcs/correlation.hpp"

#include "gcs/kernels.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace gcs {

std::complex<double> CorrelationProfile::at(long long tau) const {
  const long long Ls = static_cast<long long>(L);
  if (tau <= -Ls || tau >= Ls) return {0.0, 0.0};
  return values[static_cast<std::size_t>(tau + Ls - 1)];
}

std::complex<double> accf(const ComplexSequence& a, const ComplexSequence& b,
                          long long tau) {
  if (a.size() != b.size())
    throw std::invalid_argument("accf: sequences have different lengths");
  const long long L = static_cast<long long>(a.size());
  if (tau >= L || tau <= -L) return {0.0, 0.0};
  const kernels::Backend& k = kernels::active();
  if (tau >= 0)
    return k.conj_dot(a.re.data(), a.im.data(), b.re.data() + tau,
                      b.im.data() + tau, static_cast<std::size_t>(L - tau));
  const long long s = -tau;
  return k.conj_dot(a.re.data() + s, a.im.data() + s, b.re.data(), b.im.data(),
                    static_cast<std::size_t>(L - s));
}

std::complex<double> aacf(const ComplexSequence& a, long long tau) {
  return accf(a, a, tau);
}

CorrelationProfile aacf_sum(const std::vector<ComplexSequence>& set) {
  if (set.empty()) throw std::invalid_argument("aacf_sum: empty set");
  const std::size_t L = set.front().size();
  if (L == 0) throw std::invalid_argument("aacf_sum: zero-length sequences");
  for (const ComplexSequence& s : set)
    if (s.size() != L)
      throw std::invalid_argument("aacf_sum: members have different lengths");

  CorrelationProfile prof;
  prof.L = L;
  prof.values.assign(2 * L - 1, {0.0, 0.0});
  const long long Ls = static_cast<long long>(L);
  for (const ComplexSequence& s : set)
    for (long long tau = 0; tau < Ls; ++tau)
      prof.values[static_cast<std::size_t>(tau + Ls - 1)] += aacf(s, tau);
  // Autocorrelations obey value(-tau) = conj(value(tau)); fill the negative
  // shifts from the computed half.
  for (long long tau = 1; tau < Ls; ++tau)
    prof.values[static_cast<std::size_t>(Ls - 1 - tau)] =
        std::conj(prof.values[static_cast<std::size_t>(tau + Ls - 1)]);
  return prof;
}

GcsCheck is_gcs(const std::vector<ComplexSequence>& set, double tol) {
  if (tol < 0.0) throw std::invalid_argument("is_gcs: tolerance must be >= 0");
  const CorrelationProfile prof = aacf_sum(set);
  GcsCheck check;
  check.tol = tol;
  check.peak = std::abs(prof.at(0));
  check.worst_tau = 0;
  check.worst_abs = -1.0;
  const long long Ls = static_cast<long long>(prof.L);
  for (long long tau = 1; tau < Ls; ++tau) {
    const double mag = std::abs(prof.at(tau));
    if (mag > check.worst_abs) {
      check.worst_abs = mag;
      check.worst_tau = tau;
    }
  }
  if (check.worst_abs < 0.0) {  // L == 1: no nonzero shifts exist
    check.worst_abs = 0.0;
    check.worst_tau = 0;
  }
  check.ok = check.worst_abs <= tol;
  return check;
}

double default_tolerance(std::size_t flock, std::size_t length) {
  return 1e-9 * static_cast<double>(flock) * static_cast<double>(length);
}

std::string profile_csv(const CorrelationProfile& profile) {
  std::string out = "tau,real,imag\n";
  const long long Ls = static_cast<long long>(profile.L);
  char buf[96];
  for (long long tau = -(Ls - 1); tau <= Ls - 1; ++tau) {
    const std::complex<double> v = profile.at(tau);
    double re = v.real(), im = v.imag();
    // Values that round to zero at 12 decimals print as +0, not "-0.000...".
    if (std::fabs(re) < 0.5e-12) re = 0.0;
    if (std::fabs(im) < 0.5e-12) im = 0.0;
    std::snprintf(buf, sizeof buf, "%lld,%.12f,%.12f\n", tau, re, im);
    out += buf;
  }
  return out;
}

}  // namespace gcs
