#pragma once

#include "gcs/construct.hpp"
#include "gcs/ebf.hpp"

#include <cstddef>
#include <vector>

namespace gcs {

// Instantaneous envelope power of the multicarrier signal carrying sequence
// a, sampled on the dense grid u_j = j / (oversampling * L) over one
// subcarrier-spacing period u in [0, 1):
//   powers[j] = | sum_{i=1}^{L} zeta_q^{a_i} e^{2 pi sqrt(-1) (i-1) u_j} |^2.
// The common carrier factor is a unit-modulus multiple and is dropped; u = 1
// would repeat u = 0 exactly (integer frequencies), so the half-open grid
// loses nothing.
struct EnvelopeGrid {
  int oversampling = 64;
  std::vector<double> powers;  // length oversampling * L, entries in [0, L^2]
};

EnvelopeGrid envelope_power(const ZqSequence& a, int oversampling);

// Peak-to-mean envelope power ratio estimated on that grid: max(powers) / L
// (mean power is exactly L for unit-modulus symbols). Nondecreasing under
// grid refinement; >= 1 - 1e-6 for oversampling >= 16.
double pmepr(const ZqSequence& a, int oversampling = 64);

// Per-member PMEPR of a constructed set, with the flock-size bound check: a
// complementary set of M sequences has every member's PMEPR at most M, so
// the report flags max_value > members + 1e-6 as a violation.
struct PmeprReport {
  std::vector<double> values;  // one per member, in member order
  double max_value = 0.0;
  std::size_t argmax = 0;
  double bound = 0.0;  // member count of the set as given
  bool within_bound = false;
};

PmeprReport pmepr_report(const GcsSet& set, int oversampling = 64);

// Same report for a bare list of rows (used for sets loaded from files,
// where only the sequences are known).
PmeprReport pmepr_report_rows(const std::vector<ZqSequence>& rows,
                              int oversampling = 64);

}  // namespace gcs
