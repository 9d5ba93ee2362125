#pragma once

#include "gcs/ebf.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace gcs {

// Smallest m with L < p^m (equivalently p^{m-1} <= L < p^m). Requires p >= 2,
// L >= 1.
int infer_m(int p, std::uint64_t L);

// The coset-dimension rule, from the base-p digits (d_1, ..., d_m) of L-1:
//   - the smallest k' in [2, m-1] with d_a = 0 for every a in [k', m-1], if
//     one exists;
//   - else 2 when d_m = 0 (only L = p^{m-1} reaches this: the lower digits
//     are then all p-1 and the top variable is constant over the index
//     range);
//   - else m.
// The middle clause deliberately requires d_m = 0. Extending it to every
// all-(p-1) digit string regardless of d_m breaks the complementarity
// property (e.g. p=3, L=54: lengths of the form c*p^{m-1} with c >= 2), which
// the randomized sweep demonstrates; with the d_m = 0 restriction the sweep
// passes across the whole supported parameter space.
int compute_k(const std::vector<int>& digits, int p);

// The full parameter bundle of the construction: free inputs (p, q, L, pi, g,
// c, c_prime) plus the derived quantities (m, digits, k).
struct GcsParams {
  int p = 2;
  int q = 2;
  std::uint64_t L = 2;
  int m = 0;                // derived: p^{m-1} <= L < p^m
  std::vector<int> digits;  // derived: base-p digits of L-1, least significant first
  int k = 0;                // derived: see compute_k

  std::vector<int> pi;  // images of 1..m-1 (1-based values); pi[0] must be 1
  Ebf g{2, 1, 2};       // arbitrary function of the first m-1 variables
  std::vector<int> c;   // m linear coefficients in [0, q)
  int c_prime = 0;      // constant offset in [0, q)

  // Validates in a fixed order (first failure reported): p >= 2; q a positive
  // multiple of p; L >= p; pi a bijection on 1..m-1 fixing 1; c of length m
  // with entries in [0, q); c_prime in [0, q); g a function of m-1 variables
  // over the same (p, q). Derives m, digits, k.
  static GcsParams make(int p, int q, std::uint64_t L, std::vector<int> pi,
                        Ebf g, std::vector<int> c, int c_prime);

  // Identity pi, zero g, zero c, zero c_prime.
  static GcsParams defaults(int p, int q, std::uint64_t L);
};

// The seed function: (q/p) * sum_{a=1}^{m-2} x_{pi(a)} x_{pi(a+1)}
//                    + g(x_1..x_{m-1}) * prod_{l=0}^{d_m-1} (x_m - l)
//                    + sum_a c_a x_a + c_prime,
// with the product term suppressed entirely when d_m = 0.
Ebf build_f(const GcsParams& params);

// One coset function: f + gamma_1 (q/p) x_{pi(1)}
//                       + (q/p) sum_{a=2}^{k-1} gamma_a x_a   (plain x_a)
//                       + gamma_k (q/p) x_m.
// Throws when gamma does not have exactly k entries in [0, p).
Ebf build_coset(const Ebf& f, const std::vector<int>& gamma,
                const GcsParams& params);

struct GcsSet {
  GcsParams params;
  struct Member {
    std::vector<int> gamma;
    ZqSequence zq;
    ComplexSequence cx;
  };
  std::vector<Member> members;
};

// All p^k cosets, gamma enumerated with gamma_1 fastest-varying (member r has
// gamma = base-p digits of r). Refuses sets needing more than 10^7 sequence
// entries in total.
GcsSet build_gcs(const GcsParams& params);

// Removes exact-duplicate Z_q rows, keeping first occurrences. Collapses the
// L = p^{m-1} case from p^k members to exactly p; otherwise typically a no-op.
GcsSet dedupe(const GcsSet& set);

// Uniformly random free parameters for given (p, q, L): pi fixing 1, g with
// up to 8 random monomials over m-1 variables, uniform c and c_prime. Draws
// from rng in a fixed documented order (pi, g, c, c_prime) so streams are
// reproducible.
GcsParams random_params(int p, int q, std::uint64_t L, std::mt19937_64& rng);

// Randomized-sweep configuration: each draw picks p from ps, q = p * (an
// element of q_mults), L uniform in [p, L_max] (when L_max < p the draw is
// skipped, not failed), then random free parameters. Any of the fix_ fields,
// when set, replaces the corresponding random choice.
struct SweepSpec {
  std::vector<int> ps{2, 3, 4, 5};
  std::vector<int> q_mults{1, 2, 3};
  std::uint64_t L_max = 200;

  std::optional<std::uint64_t> fix_L;
  std::optional<std::vector<int>> fix_pi;
  std::optional<std::string> fix_g_anf;
  std::optional<std::vector<int>> fix_c;
  std::optional<int> fix_c_prime;
};

struct SweepDraw {
  int p = 0;
  int q = 0;
  std::uint64_t L = 0;
  bool skipped = false;
  std::string skip_reason;
  std::optional<GcsParams> params;  // set when not skipped
};

// Draw `index` of the sweep seeded by `seed`: deterministic, and independent
// across indices (each index gets its own generator stream).
SweepDraw draw_sweep(const SweepSpec& spec, std::uint64_t seed,
                     std::uint64_t index);

}  // namespace gcs
