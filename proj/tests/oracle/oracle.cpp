#include "oracle/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "gcs/correlation.hpp"
#include "gcs/errors.hpp"
#include "gcs/rng.hpp"

namespace gcs::oracle {

namespace {

// Exact Gaussian-integer value of the q-th unit root raised to symbol v,
// valid only when q divides 4.
struct GaussInt {
  long long re = 0;
  long long im = 0;
};

GaussInt axis_root(int q, int v) {
  // quarter turns per symbol step: q=2 -> 2 quarters, q=4 -> 1 quarter
  const int quarters = (4 / q * v) % 4;
  switch (quarters) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

// a * conj(b) over Gaussian integers.
GaussInt mul_conj(GaussInt a, GaussInt b) {
  return {a.re * b.re + a.im * b.im, a.im * b.re - a.re * b.im};
}

bool exact_pair_complementary(const std::vector<std::vector<GaussInt>>& rows,
                              std::size_t L) {
  for (std::size_t tau = 1; tau < L; ++tau) {
    GaussInt sum{0, 0};
    for (const auto& row : rows) {
      for (std::size_t i = 0; i + tau < L; ++i) {
        GaussInt term = mul_conj(row[i], row[i + tau]);
        sum.re += term.re;
        sum.im += term.im;
      }
    }
    if (sum.re != 0 || sum.im != 0) return false;
  }
  return true;
}

std::vector<int> index_to_row(std::uint64_t idx, int q, int L) {
  std::vector<int> row(static_cast<std::size_t>(L));
  for (int j = 0; j < L; ++j) {
    row[static_cast<std::size_t>(j)] = static_cast<int>(idx % q);
    idx /= static_cast<std::uint64_t>(q);
  }
  return row;
}

bool doubles_complementary(const std::vector<std::vector<int>>& rows, int q,
                           int L, double tol) {
  const double step = 2.0 * M_PI / q;
  for (int tau = 1; tau < L; ++tau) {
    std::complex<double> sum = 0.0;
    for (const auto& row : rows) {
      for (int i = 0; i + tau < L; ++i) {
        const double phase = step * (row[static_cast<std::size_t>(i)] -
                                     row[static_cast<std::size_t>(i + tau)]);
        sum += std::complex<double>(std::cos(phase), std::sin(phase));
      }
    }
    if (std::abs(sum) > tol) return false;
  }
  return true;
}

}  // namespace

std::complex<double> naive_accf(const ComplexSequence& a,
                                const ComplexSequence& b, long long tau) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("naive_accf: sequences differ in length");
  }
  const long long L = static_cast<long long>(a.size());
  std::complex<double> sum = 0.0;
  if (tau >= 0) {
    // sum_{i=1}^{L-tau} a_i * conj(b_{i+tau}), written 1-based then shifted
    for (long long i = 1; i <= L - tau; ++i) {
      sum += a.at(static_cast<std::size_t>(i - 1)) *
             std::conj(b.at(static_cast<std::size_t>(i - 1 + tau)));
    }
  } else {
    // sum_{i=1}^{L+tau} a_{i-tau} * conj(b_i)
    for (long long i = 1; i <= L + tau; ++i) {
      sum += a.at(static_cast<std::size_t>(i - tau - 1)) *
             std::conj(b.at(static_cast<std::size_t>(i - 1)));
    }
  }
  return sum;
}

bool exact_gcs(const std::vector<ZqSequence>& rows) {
  if (rows.empty()) {
    throw std::invalid_argument("exact_gcs: empty set");
  }
  const int q = rows.front().q;
  if (q != 2 && q != 4) {
    throw std::invalid_argument(
        "exact_gcs: exact arithmetic requires q in {2, 4}");
  }
  const std::size_t L = rows.front().size();
  std::vector<std::vector<GaussInt>> lifted;
  lifted.reserve(rows.size());
  for (const auto& row : rows) {
    if (row.q != q || row.size() != L) {
      throw std::invalid_argument("exact_gcs: rows differ in shape");
    }
    std::vector<GaussInt> vals;
    vals.reserve(L);
    for (int v : row.values) vals.push_back(axis_root(q, v));
    lifted.push_back(std::move(vals));
  }
  return exact_pair_complementary(lifted, L);
}

std::vector<std::vector<int>> table1_matrix() {
  std::vector<std::vector<int>> rows;
  rows.reserve(16);
  for (int r = 0; r < 16; ++r) {
    const int g1 = r % 4;
    const int g2 = r / 4;
    std::vector<int> row;
    row.reserve(19);
    for (int i = 0; i < 19; ++i) {
      const int x1 = i % 4;
      const int x2 = (i / 4) % 4;
      const int x3 = (i / 16) % 4;
      row.push_back((x1 * x2 + 3 * x1 * x2 * x3 + g1 * x1 + g2 * x3) % 4);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::vector<std::vector<int>>> exhaustive_tiny_search(int q, int L,
                                                                  int M) {
  if (q < 2) throw std::invalid_argument("search: q must be >= 2");
  if (L < 1 || L > 4) {
    throw BoundError("search: length " + std::to_string(L) +
                     " outside supported range [1, 4]");
  }
  if (M < 1 || M > 2) {
    throw BoundError("search: set size " + std::to_string(M) +
                     " outside supported range [1, 2]");
  }
  double space = 1.0;
  for (int i = 0; i < L * M; ++i) space *= q;
  if (space > 1e7) {
    throw BoundError("search: q^(L*M) = " + std::to_string(space) +
                     " exceeds the 1e7 enumeration budget");
  }

  std::uint64_t total = 1;
  for (int i = 0; i < L; ++i) total *= static_cast<std::uint64_t>(q);

  const bool exact = (q == 2 || q == 4);
  std::vector<std::vector<std::vector<int>>> found;

  auto check = [&](const std::vector<std::vector<int>>& rows) {
    if (exact) {
      std::vector<std::vector<GaussInt>> lifted;
      lifted.reserve(rows.size());
      for (const auto& row : rows) {
        std::vector<GaussInt> vals;
        vals.reserve(row.size());
        for (int v : row) vals.push_back(axis_root(q, v));
        lifted.push_back(std::move(vals));
      }
      return exact_pair_complementary(lifted, static_cast<std::size_t>(L));
    }
    return doubles_complementary(rows, q, L, 1e-9);
  };

  if (M == 1) {
    for (std::uint64_t ia = 0; ia < total; ++ia) {
      std::vector<std::vector<int>> rows{index_to_row(ia, q, L)};
      if (check(rows)) {
        std::sort(rows.begin(), rows.end());
        found.push_back(std::move(rows));
      }
    }
  } else {
    for (std::uint64_t ia = 0; ia < total; ++ia) {
      for (std::uint64_t ib = ia; ib < total; ++ib) {
        std::vector<std::vector<int>> rows{index_to_row(ia, q, L),
                                           index_to_row(ib, q, L)};
        if (check(rows)) {
          std::sort(rows.begin(), rows.end());
          found.push_back(std::move(rows));
        }
      }
    }
  }
  return found;
}

OracleReport compare_accf(std::size_t cases, std::uint64_t seed, double tol) {
  std::mt19937_64 rng(splitmix64(seed));
  OracleReport report;
  for (std::size_t n = 0; n < cases; ++n) {
    const int q = 2 + static_cast<int>(bounded(rng, 11));
    const std::size_t L = 1 + static_cast<std::size_t>(bounded(rng, 64));
    auto draw_row = [&]() {
      std::vector<int> vals(L);
      for (auto& v : vals) v = static_cast<int>(bounded(rng, q));
      return ZqSequence(q, std::move(vals));
    };
    const ComplexSequence a = to_complex(draw_row());
    const ComplexSequence b = to_complex(draw_row());
    const long long span = static_cast<long long>(L) + 2;
    const long long tau =
        static_cast<long long>(bounded(rng, 2 * static_cast<std::uint64_t>(span) + 1)) -
        span;

    const std::complex<double> lib = accf(a, b, tau);
    const std::complex<double> ref = naive_accf(a, b, tau);
    ++report.cases_run;
    if (std::abs(lib - ref) > tol) {
      char buf[128];
      std::snprintf(buf, sizeof(buf), "case %zu: q=%d L=%zu tau=%lld", n, q, L,
                    tau);
      report.mismatches.push_back({buf, lib, ref});
    }
  }
  return report;
}

}  // namespace gcs::oracle
