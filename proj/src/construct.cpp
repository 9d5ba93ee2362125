#include "gcs/construct.hpp"

#include "gcs/errors.hpp"
#include "gcs/rng.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>

namespace gcs {

namespace {

std::uint64_t checked_pow_u64(int p, int m) {
  std::uint64_t r = 1;
  for (int i = 0; i < m; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(p))
      return std::numeric_limits<std::uint64_t>::max();
    r *= static_cast<std::uint64_t>(p);
  }
  return r;
}

std::vector<int> unit_exponent(int m, int var /* 1-based */) {
  std::vector<int> e(static_cast<std::size_t>(m), 0);
  e[static_cast<std::size_t>(var - 1)] = 1;
  return e;
}

// Total sequence entries a set may occupy; beyond this the construction
// refuses rather than exhausting memory.
constexpr std::uint64_t kMaxSetEntries = 10'000'000;

}  // namespace

int infer_m(int p, std::uint64_t L) {
  if (p < 2) throw std::invalid_argument("infer_m: p must be >= 2");
  if (L < 1) throw std::invalid_argument("infer_m: L must be >= 1");
  int m = 1;
  std::uint64_t pw = static_cast<std::uint64_t>(p);  // p^m
  while (L >= pw) {
    if (pw > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(p))
      throw std::invalid_argument("infer_m: L is too large");
    pw *= static_cast<std::uint64_t>(p);
    ++m;
  }
  return m;
}

int compute_k(const std::vector<int>& digits, int p) {
  const int m = static_cast<int>(digits.size());
  if (m < 2)
    throw std::invalid_argument(
        "compute_k: needs at least two digits (lengths below p are unsupported)");
  for (int d : digits)
    if (d < 0 || d >= p)
      throw std::invalid_argument("compute_k: digits must lie in [0, p)");
  for (int k = 2; k <= m - 1; ++k) {
    bool zeros = true;
    for (int a = k; a <= m - 1 && zeros; ++a)
      zeros = digits[static_cast<std::size_t>(a - 1)] == 0;
    if (zeros) return k;
  }
  if (digits[static_cast<std::size_t>(m - 1)] == 0) return 2;
  return m;
}

GcsParams GcsParams::make(int p, int q, std::uint64_t L, std::vector<int> pi,
                          Ebf g, std::vector<int> c, int c_prime) {
  if (p < 2) throw std::invalid_argument("params: p must be >= 2");
  if (q < 1 || q % p != 0)
    throw std::invalid_argument("params: q must be a positive multiple of p");
  if (L < 1) throw std::invalid_argument("params: L must be >= 1");

  GcsParams out;
  out.p = p;
  out.q = q;
  out.L = L;
  out.m = infer_m(p, L);
  if (out.m < 2)
    throw std::invalid_argument(
        "params: L must be >= p (lengths below the alphabet base leave the "
        "construction with a single variable and no coset structure)");
  out.digits = p_ary_digits(L - 1, p, out.m);
  out.k = compute_k(out.digits, p);

  if (pi.size() != static_cast<std::size_t>(out.m - 1))
    throw std::invalid_argument("params: pi must list the images of 1.." +
                                std::to_string(out.m - 1));
  std::vector<bool> seen(static_cast<std::size_t>(out.m - 1), false);
  for (int v : pi) {
    if (v < 1 || v > out.m - 1 || seen[static_cast<std::size_t>(v - 1)])
      throw std::invalid_argument("params: pi must be a bijection on 1.." +
                                  std::to_string(out.m - 1));
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
  if (pi.front() != 1)
    throw std::invalid_argument("params: pi must fix 1 (pi(1) = 1)");
  out.pi = std::move(pi);

  if (c.size() != static_cast<std::size_t>(out.m))
    throw std::invalid_argument("params: c must have m = " +
                                std::to_string(out.m) + " entries");
  for (int v : c)
    if (v < 0 || v >= q)
      throw std::invalid_argument("params: c entries must lie in [0, q)");
  out.c = std::move(c);
  if (c_prime < 0 || c_prime >= q)
    throw std::invalid_argument("params: c_prime must lie in [0, q)");
  out.c_prime = c_prime;

  if (g.p() != p || g.q() != q || g.m() != out.m - 1)
    throw std::invalid_argument(
        "params: g must be a function of the first m-1 = " +
        std::to_string(out.m - 1) + " variables over the same (p, q)");
  out.g = std::move(g);
  return out;
}

GcsParams GcsParams::defaults(int p, int q, std::uint64_t L) {
  const int m = infer_m(p, L);
  if (m < 2)
    throw std::invalid_argument(
        "params: L must be >= p (lengths below the alphabet base leave the "
        "construction with a single variable and no coset structure)");
  std::vector<int> pi(static_cast<std::size_t>(m - 1));
  std::iota(pi.begin(), pi.end(), 1);
  return make(p, q, L, std::move(pi), Ebf(p, m - 1, q),
              std::vector<int>(static_cast<std::size_t>(m), 0), 0);
}

Ebf build_f(const GcsParams& P) {
  const long long qp = P.q / P.p;
  Ebf f(P.p, P.m, P.q);

  for (int a = 1; a <= P.m - 2; ++a) {
    std::vector<int> e(static_cast<std::size_t>(P.m), 0);
    e[static_cast<std::size_t>(P.pi[static_cast<std::size_t>(a - 1)] - 1)] += 1;
    e[static_cast<std::size_t>(P.pi[static_cast<std::size_t>(a)] - 1)] += 1;
    f.add_term(e, qp);
  }

  const int dm = P.digits[static_cast<std::size_t>(P.m - 1)];
  if (dm > 0) {
    Ebf prod = P.g.lifted(P.m);
    for (int l = 0; l < dm; ++l) {
      Ebf lin(P.p, P.m, P.q);
      lin.add_term(unit_exponent(P.m, P.m), 1);
      lin.add_term(std::vector<int>(static_cast<std::size_t>(P.m), 0),
                   -static_cast<long long>(l));
      prod = prod * lin;
    }
    f = f + prod;
  }

  for (int a = 1; a <= P.m; ++a)
    if (P.c[static_cast<std::size_t>(a - 1)] != 0)
      f.add_term(unit_exponent(P.m, a), P.c[static_cast<std::size_t>(a - 1)]);
  if (P.c_prime != 0)
    f.add_term(std::vector<int>(static_cast<std::size_t>(P.m), 0), P.c_prime);
  return f;
}

Ebf build_coset(const Ebf& f, const std::vector<int>& gamma,
                const GcsParams& P) {
  if (gamma.size() != static_cast<std::size_t>(P.k))
    throw std::invalid_argument("coset: gamma must have k = " +
                                std::to_string(P.k) + " entries");
  for (int v : gamma)
    if (v < 0 || v >= P.p)
      throw std::invalid_argument("coset: gamma entries must lie in [0, p)");

  const long long qp = P.q / P.p;
  Ebf a = f;
  if (gamma.front() != 0)
    a.add_term(unit_exponent(P.m, P.pi.front()),
               static_cast<long long>(gamma.front()) * qp);
  for (int al = 2; al <= P.k - 1; ++al)
    if (gamma[static_cast<std::size_t>(al - 1)] != 0)
      a.add_term(unit_exponent(P.m, al),
                 static_cast<long long>(gamma[static_cast<std::size_t>(al - 1)]) * qp);
  if (gamma.back() != 0 && P.k >= 2)
    a.add_term(unit_exponent(P.m, P.m),
               static_cast<long long>(gamma.back()) * qp);
  return a;
}

GcsSet build_gcs(const GcsParams& P) {
  const std::uint64_t flock = checked_pow_u64(P.p, P.k);
  if (flock > kMaxSetEntries / std::max<std::uint64_t>(P.L, 1))
    throw BoundError("build_gcs: p^k * L = " + std::to_string(P.p) + "^" +
                     std::to_string(P.k) + " * " + std::to_string(P.L) +
                     " sequence entries exceed the supported total of 10^7");

  GcsSet S;
  S.params = P;
  S.members.reserve(flock);

  // Shared evaluation points: the base-p digit vectors of 0..L-1.
  std::vector<std::vector<int>> points;
  points.reserve(P.L);
  for (std::uint64_t i = 0; i < P.L; ++i)
    points.push_back(p_ary_digits(i, P.p, P.m));

  const Ebf f = build_f(P);
  for (std::uint64_t r = 0; r < flock; ++r) {
    GcsSet::Member mem;
    mem.gamma = p_ary_digits(r, P.p, P.k);
    const Ebf a = build_coset(f, mem.gamma, P);
    std::vector<int> vals;
    vals.reserve(P.L);
    for (const std::vector<int>& x : points) vals.push_back(a.evaluate(x));
    mem.zq = ZqSequence(P.q, std::move(vals));
    mem.cx = to_complex(mem.zq);
    S.members.push_back(std::move(mem));
  }
  return S;
}

GcsSet dedupe(const GcsSet& set) {
  GcsSet out;
  out.params = set.params;
  std::set<std::vector<int>> seen;
  for (const GcsSet::Member& mem : set.members)
    if (seen.insert(mem.zq.values).second) out.members.push_back(mem);
  return out;
}

GcsParams random_params(int p, int q, std::uint64_t L, std::mt19937_64& rng) {
  const int m = infer_m(p, L);
  if (m < 2)
    throw std::invalid_argument("random_params: L must be >= p");

  // Draw order is fixed (pi, g, c, c_prime) so a given stream always yields
  // the same parameters.
  std::vector<int> pi(static_cast<std::size_t>(m - 1));
  std::iota(pi.begin(), pi.end(), 1);
  for (std::size_t i = pi.size(); i-- > 2;) {
    const std::size_t j = 1 + static_cast<std::size_t>(bounded(rng, i));
    std::swap(pi[i], pi[j]);
  }

  Ebf g(p, m - 1, q);
  const std::uint64_t monomials = bounded(rng, 9);  // up to 8
  for (std::uint64_t t = 0; t < monomials; ++t) {
    const long long coeff = static_cast<long long>(bounded(rng, static_cast<std::uint64_t>(q)));
    std::vector<int> exps(static_cast<std::size_t>(m - 1));
    for (int a = 0; a < m - 1; ++a)
      exps[static_cast<std::size_t>(a)] =
          static_cast<int>(bounded(rng, static_cast<std::uint64_t>(p)));
    g.add_term(exps, coeff);
  }

  std::vector<int> c(static_cast<std::size_t>(m));
  for (int a = 0; a < m; ++a)
    c[static_cast<std::size_t>(a)] =
        static_cast<int>(bounded(rng, static_cast<std::uint64_t>(q)));
  const int c_prime = static_cast<int>(bounded(rng, static_cast<std::uint64_t>(q)));

  return GcsParams::make(p, q, L, std::move(pi), std::move(g), std::move(c),
                         c_prime);
}

SweepDraw draw_sweep(const SweepSpec& spec, std::uint64_t seed,
                     std::uint64_t index) {
  if (spec.ps.empty() || spec.q_mults.empty())
    throw std::invalid_argument("sweep: p and q-multiplier lists must be nonempty");
  for (int p : spec.ps)
    if (p < 2) throw std::invalid_argument("sweep: every p must be >= 2");
  for (int mult : spec.q_mults)
    if (mult < 1) throw std::invalid_argument("sweep: every q multiplier must be >= 1");
  if (spec.L_max < 1) throw std::invalid_argument("sweep: L_max must be >= 1");

  std::mt19937_64 rng(splitmix64(seed) ^ splitmix64(0x9e3779b97f4a7c15ULL + index));

  SweepDraw d;
  d.p = spec.ps[static_cast<std::size_t>(bounded(rng, spec.ps.size()))];
  d.q = d.p * spec.q_mults[static_cast<std::size_t>(bounded(rng, spec.q_mults.size()))];

  const std::uint64_t p64 = static_cast<std::uint64_t>(d.p);
  if (spec.fix_L) {
    d.L = *spec.fix_L;
  } else if (spec.L_max >= p64) {
    d.L = p64 + bounded(rng, spec.L_max - p64 + 1);
  } else {
    d.L = 1 + bounded(rng, spec.L_max);
  }
  if (d.L < p64) {
    d.skipped = true;
    d.skip_reason = "L < p: lengths below the alphabet base are unsupported";
    return d;
  }

  GcsParams params = random_params(d.p, d.q, d.L, rng);
  if (spec.fix_pi || spec.fix_g_anf || spec.fix_c || spec.fix_c_prime) {
    const std::vector<int> pi = spec.fix_pi ? *spec.fix_pi : params.pi;
    const Ebf g = spec.fix_g_anf
                      ? parse_anf(*spec.fix_g_anf, d.p, params.m - 1, d.q)
                      : params.g;
    const std::vector<int> c = spec.fix_c ? *spec.fix_c : params.c;
    const int c_prime = spec.fix_c_prime ? *spec.fix_c_prime : params.c_prime;
    params = GcsParams::make(d.p, d.q, d.L, pi, g, c, c_prime);
  }
  d.params = std::move(params);
  return d;
}

}  // namespace gcs
