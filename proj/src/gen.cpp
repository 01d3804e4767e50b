#include "ramseykit/gen.hpp"

#include "ramseykit/codec.hpp"
#include "ramseykit/errors.hpp"

namespace ramseykit {

std::uint64_t mix64(std::uint64_t seed, std::uint64_t rank) {
    // splitmix64: advance the state by (rank+1) golden-ratio increments,
    // then apply the finalizer.  rank+1 keeps rank 0 from echoing the seed.
    std::uint64_t x = seed + 0x9e3779b97f4a7c15ULL * (rank + 1);
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Distribution parse_distribution(const std::string& name) {
    if (name == "uniform") return Distribution::Uniform;
    if (name == "all-red") return Distribution::AllRed;
    if (name == "all-blue") return Distribution::AllBlue;
    if (name == "pentagon-like") return Distribution::PentagonLike;
    throw ParameterError("unknown distribution: " + name);
}

std::string distribution_name(Distribution d) {
    switch (d) {
    case Distribution::Uniform: return "uniform";
    case Distribution::AllRed: return "all-red";
    case Distribution::AllBlue: return "all-blue";
    case Distribution::PentagonLike: return "pentagon-like";
    }
    return "?";
}

TwoColouring gen_colouring(int n, const GenSpec& spec) {
    require(n >= 1, "gen_colouring: n must be >= 1");
    switch (spec.dist) {
    case Distribution::AllRed: return TwoColouring::all_red(n);
    case Distribution::AllBlue: return TwoColouring::all_blue(n);
    case Distribution::PentagonLike:
        require(n == 5, "pentagon-like distribution requires n = 5");
        return TwoColouring::pentagon();
    case Distribution::Uniform: break;
    }
    require(spec.q >= 1, "gen_colouring: probability denominator must be >= 1");
    require(spec.p <= spec.q, "gen_colouring: need p <= q");
    TwoColouring c(n);
    // red iff mix64 < 2^64 * p / q, compared exactly in 128 bits
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::uint64_t rank = static_cast<std::uint64_t>(pair_rank(n, i, j));
            unsigned __int128 lhs =
                static_cast<unsigned __int128>(mix64(spec.seed, rank)) * spec.q;
            unsigned __int128 rhs = static_cast<unsigned __int128>(spec.p)
                                    << 64;
            if (lhs < rhs) c.paint(i, j, Colour::Red);
        }
    return c;
}

} // namespace ramseykit
