#include "gcs/pmepr.hpp"

#include "gcs/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gcs {

namespace {

// Split-layout grid of npts equally spaced unit-circle points e^{2 pi i j/n};
// points on a coordinate axis are exact.
struct UnitGrid {
  std::vector<double> re, im;
};

UnitGrid make_grid(std::size_t npts) {
  UnitGrid g;
  g.re.resize(npts);
  g.im.resize(npts);
  for (std::size_t j = 0; j < npts; ++j) {
    const std::size_t quarters = 4 * j;
    if (quarters % npts == 0) {
      static constexpr double kAxisRe[4] = {1.0, 0.0, -1.0, 0.0};
      static constexpr double kAxisIm[4] = {0.0, 1.0, 0.0, -1.0};
      const std::size_t axis = (quarters / npts) & 3;
      g.re[j] = kAxisRe[axis];
      g.im[j] = kAxisIm[axis];
    } else {
      const double theta =
          2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(npts);
      g.re[j] = std::cos(theta);
      g.im[j] = std::sin(theta);
    }
  }
  return g;
}

std::vector<double> powers_on_grid(const ZqSequence& a, const UnitGrid& grid) {
  const ComplexSequence coeffs = to_complex(a);
  std::vector<double> powers(grid.re.size());
  kernels::active().power_eval(coeffs.re.data(), coeffs.im.data(), coeffs.size(),
                               grid.re.data(), grid.im.data(), powers.data(),
                               powers.size());
  return powers;
}

double peak_ratio(const std::vector<double>& powers, std::size_t L) {
  const double peak = *std::max_element(powers.begin(), powers.end());
  return peak / static_cast<double>(L);
}

void check_pre(const ZqSequence& a, int oversampling) {
  if (oversampling < 1)
    throw std::invalid_argument("pmepr: oversampling factor must be >= 1");
  if (a.size() == 0) throw std::invalid_argument("pmepr: empty sequence");
}

}  // namespace

EnvelopeGrid envelope_power(const ZqSequence& a, int oversampling) {
  check_pre(a, oversampling);
  EnvelopeGrid out;
  out.oversampling = oversampling;
  out.powers = powers_on_grid(
      a, make_grid(static_cast<std::size_t>(oversampling) * a.size()));
  return out;
}

double pmepr(const ZqSequence& a, int oversampling) {
  return peak_ratio(envelope_power(a, oversampling).powers, a.size());
}

namespace {

PmeprReport report_impl(const std::vector<const ZqSequence*>& rows,
                        int oversampling) {
  if (rows.empty())
    throw std::invalid_argument("pmepr_report: set has no members");
  const std::size_t L = rows.front()->size();
  for (const ZqSequence* row : rows)
    if (row->size() != L)
      throw std::invalid_argument("pmepr_report: members have different lengths");
  check_pre(*rows.front(), oversampling);

  // One grid for the whole set: members share the same length.
  const UnitGrid grid = make_grid(static_cast<std::size_t>(oversampling) * L);

  PmeprReport rep;
  rep.values.reserve(rows.size());
  rep.bound = static_cast<double>(rows.size());
  rep.max_value = -1.0;
  for (std::size_t idx = 0; idx < rows.size(); ++idx) {
    const double value = peak_ratio(powers_on_grid(*rows[idx], grid), L);
    rep.values.push_back(value);
    if (value > rep.max_value) {
      rep.max_value = value;
      rep.argmax = idx;
    }
  }
  rep.within_bound = rep.max_value <= rep.bound + 1e-6;
  return rep;
}

}  // namespace

PmeprReport pmepr_report(const GcsSet& set, int oversampling) {
  std::vector<const ZqSequence*> rows;
  rows.reserve(set.members.size());
  for (const GcsSet::Member& mem : set.members) rows.push_back(&mem.zq);
  return report_impl(rows, oversampling);
}

PmeprReport pmepr_report_rows(const std::vector<ZqSequence>& rows,
                              int oversampling) {
  std::vector<const ZqSequence*> ptrs;
  ptrs.reserve(rows.size());
  for (const ZqSequence& row : rows) ptrs.push_back(&row);
  return report_impl(ptrs, oversampling);
}

}  // namespace gcs
