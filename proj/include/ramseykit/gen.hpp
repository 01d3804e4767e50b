#pragma once

#include <cstdint>
#include <string>

#include "ramseykit/graph.hpp"

namespace ramseykit {

// Counter-based pseudo-random stream.  Each value is a pure function of
// (seed, rank), so colourings are reproducible independently of evaluation
// order or thread count.  The mixer is the splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t seed, std::uint64_t rank);

enum class Distribution {
    Uniform,      // each pair red with probability p/q, independently
    AllRed,       // every pair red
    AllBlue,      // every pair blue
    PentagonLike, // N must be 5: red C5 0-1-2-3-4-0, rest blue
};

Distribution parse_distribution(const std::string& name);
std::string distribution_name(Distribution d);

struct GenSpec {
    Distribution dist = Distribution::Uniform;
    std::uint64_t p = 1, q = 2; // red probability p/q for Uniform
    std::uint64_t seed = 0;
};

// Colouring of K_N.  Pair (i,j), i<j, has rank i*N - i*(i+1)/2 + (j-i-1);
// for Uniform it is red iff mix64(seed, rank) < 2^64 * p / q (exact
// comparison in 128-bit arithmetic, no floating point).
TwoColouring gen_colouring(int n, const GenSpec& spec);

} // namespace ramseykit
