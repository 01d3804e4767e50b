#pragma once

#include <optional>
#include <vector>

#include "ramseykit/graph.hpp"

namespace ramseykit {

// Hard size cap for exhaustive arrowing searches.  Anything above this
// raises CapacityError instead of silently guessing.
inline constexpr int kArrowsCap = 8;

// Outcome of an exhaustive arrowing decision K_N -> (pattern1, pattern2).
// When holds is false, `witness` is a colouring with no red pattern1 and no
// blue pattern2; when holds is true there is no witness — exhaustiveness of
// the search is the proof.
struct ArrowingResult {
    bool holds = false;
    std::optional<TwoColouring> witness;
};

// Smallest N with K_N -> (pattern, pattern), or an over-cap report.
struct RamseyValue {
    std::optional<int> value;            // set iff some N <= cap arrows
    int cap = 0;
    int lower_bound = 1;                 // r(pattern) >= lower_bound, witness-backed
    std::optional<TwoColouring> witness; // good colouring at value-1, or at cap when over
    bool over_cap() const { return !value.has_value(); }
};

// First monochromatic copy of `pattern` inside the `colour` class of `c`,
// or nullopt when the colour-class graph has no such subgraph (not
// necessarily induced).  Deterministic: pattern vertices are assigned in
// descending-degree order (ties by index) and host candidates are tried in
// ascending order, so the returned embedding is the first in that DFS.
std::optional<Embedding> find_mono_copy(const TwoColouring& c,
                                        const Graph& pattern, Colour colour);

// Same search against an explicit host graph (used by callers that already
// hold one colour class as a Graph); returns the pattern -> host vertex map.
std::optional<std::vector<int>> find_subgraph(const Graph& host,
                                              const Graph& pattern);

// Exhaustive arrowing decision: does every red/blue colouring of the edges
// of K_N contain a red copy of pattern1 or a blue copy of pattern2?
// DFS over pairs in lexicographic order, red tried before blue, branches cut
// as soon as the newly coloured pair completes a monochromatic copy.  In the
// diagonal case (pattern1 == pattern2) the first pair is fixed red, which is
// sound under the colour swap.  The witness, when holds is false, is the
// first good colouring in that DFS order regardless of `threads`: parallel
// runs split the search on colour prefixes and keep the witness from the
// smallest prefix.
// Throws CapacityError when n > kArrowsCap.
ArrowingResult arrows(int n, const Graph& pattern1, const Graph& pattern2,
                      int threads = 1);

// Smallest N <= cap with arrows(N, pattern, pattern), scanning N upward so
// every level below the answer leaves a verified witness.  When no N <= cap
// arrows, returns an over-cap value carrying lower_bound = cap + 1 and the
// witness at cap.
RamseyValue ramsey_number(const Graph& pattern, int cap, int threads = 1);

} // namespace ramseykit
