#pragma once

#include <cstdint>
#include <random>

namespace gcs {

// SplitMix64 mixing step; used to derive independent per-index seeds from a
// user seed.
std::uint64_t splitmix64(std::uint64_t x);

// Uniform draw from [0, n) by rejection sampling on the raw generator output.
// Unbiased for every n >= 1, and byte-reproducible across platforms — the
// std::mt19937_64 output sequence is fully specified, unlike the stdlib
// distributions. Throws std::invalid_argument when n == 0.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n);

}  // namespace gcs
