#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ramseykit/bitset.hpp"
#include "ramseykit/graph.hpp"

namespace ramseykit {

// Exact rational threshold p/q; avoids floating point in all degree tests.
struct Ratio {
    long long num = 1;
    long long den = 2;
};

// One descent step: which vertex was classified, into which colour class,
// and how many vertices survived the drop into its neighbourhood.
struct DescentStep {
    int vertex = -1;
    Colour colour = Colour::Red;
    int surviving = 0;
};

// State after a descent: R red hubs, B blue hubs, U survivors.  The sets are
// pairwise disjoint, every vertex of R is red-adjacent to all of U and every
// vertex of B is blue-adjacent to all of U.  By construction the hubs are
// also internally monochromatic (each later hub was picked inside the
// earlier hub's own-colour neighbourhood), which the assemblies rely on.
struct DescentState {
    Bitset R, B, U;
    std::vector<DescentStep> trace;
};

// Pairwise-disjoint monochromatic cliques of one colour and equal size;
// each clique is stored ascending.
struct CliquePacking {
    std::vector<std::vector<int>> cliques;
    Colour colour = Colour::Red;
    int size_each = 0;
};

// Packing attempt outcome: `packing` holds whatever was extracted, complete
// or not.  Failure is this struct with achieved() < requested, not a throw.
struct PackingResult {
    CliquePacking packing;
    int requested = 0;

    int achieved() const { return static_cast<int>(packing.cliques.size()); }
    bool complete() const { return achieved() >= requested; }
};

// Greedy colouring of a digraph along a small-out-degree elimination
// ordering: `colour[v]` per vertex, `order` the placement sequence,
// `colours_used` <= 2 * (max in-degree) + 1.
struct DigraphColouring {
    std::vector<int> colour;
    std::vector<int> order;
    int colours_used = 0;
};

// A hub subset of a packed clique together with its common `colour`
// neighbourhood outside the clique.
struct PigeonholeHit {
    std::vector<int> hub;
    Bitset common;
};

// Cross-clique greedy outcome: the monochromatic clique spanning one vertex
// per input clique, or the 1-based index of the first clique with no
// eligible vertex.
struct AcrossResult {
    std::optional<Embedding> embedding;
    int failed_at = 0; // 0 on success
};

// One pipeline stage of a strategy run: what ran, with which parameters,
// what it measured, and how it ended.
struct StageRecord {
    std::string stage;
    std::map<std::string, long long> params;
    std::map<std::string, long long> sizes;
    std::string outcome;
};

// End-to-end strategy outcome: a validated monochromatic embedding of the
// target construction, or the name of the stage that ran out of material.
struct StrategyReport {
    bool found = false;
    std::optional<Embedding> embedding; // set iff found
    std::string exhausted_stage;        // set iff !found
    std::vector<StageRecord> stages;
};

// Repeatedly classify the lowest-index survivor into R or B by which of its
// colour neighbourhoods among the survivors is larger (tie -> red), dropping
// the survivor set into that neighbourhood; stops when |R| = k or |B| = k or
// the survivors run out.  Guarantees (asserted): at most 2k-1 steps and
// |U| >= N/2^s - 2 after s steps.
DescentState majority_descent(const TwoColouring& c, int k);

// Starting from start_u, repeatedly move the lowest-index vertex of maximum
// `colour`-degree into the extra hub set and drop the survivors into its
// `colour` neighbourhood — but only while that maximum is >= epsilon * |U|
// (exact rational test).  Stops at k_needed hubs or at the first round where
// no vertex qualifies, so on exit either the hub set is full or every
// survivor has `colour`-degree < epsilon * |U_final| inside U_final.
struct FractionResult {
    Bitset extra;
    Bitset u_final;
    std::vector<DescentStep> trace;
};
FractionResult fraction_descent(const TwoColouring& c, const Bitset& start_u,
                                int k_needed, Ratio epsilon,
                                Colour colour = Colour::Red);

// Greedy independent-set style clique extraction: repeatedly take the pool
// vertex of minimum sparse_colour-degree within the pool (ties by index) and
// discard it plus its sparse_colour-neighbours.  The picks form a clique in
// the opposite colour of size >= ceil(|U| / (d+1)) where d is the maximum
// sparse_colour-degree inside U; both the clique property and the bound are
// asserted.
Embedding greedy_sparse_clique(const TwoColouring& c, const Bitset& u,
                               Colour sparse_colour);

// Extract up to `count` disjoint cliques of `colour`, each of size
// `size_each`, from u: greedy_sparse_clique first, exact subgraph search as
// fallback when the greedy under-delivers and the remaining pool has at most
// exact_width vertices.  Stops early when neither route finds another
// clique; the result reports how many were achieved.
PackingResult clique_packing(const TwoColouring& c, const Bitset& u,
                             int size_each, int count, Colour colour,
                             int exact_width = 64);

// Digraph on the packed cliques with arc (i, j) exactly when some vertex of
// clique i has at least k `colour`-neighbours inside clique j.
Digraph build_aux_digraph(const TwoColouring& c, const CliquePacking& packing,
                          int k, Colour colour = Colour::Red);

// Order the vertices by repeatedly removing the lowest-index vertex whose
// remaining out-degree is <= D (D = max in-degree of the input) and placing
// it last, so every vertex has at most 2D neighbours preceding it; then
// greedy-colour along the ordering with the smallest non-conflicting colour.
// Properness, the <= 2D preceding-neighbour property, and the <= 2D+1 colour
// bound are all asserted.
DigraphColouring digraph_colouring(const Digraph& d);

// Scan the k-subsets of q in ascending lexicographic order (over the sorted
// vertices) and return the first whose common `colour`-neighbourhood outside
// q has at least n_target - k vertices, together with that neighbourhood;
// nullopt when no subset qualifies.
std::optional<PigeonholeHit> pigeonhole_extract(const TwoColouring& c,
                                                const std::vector<int>& q,
                                                int k, int n_target,
                                                Colour colour = Colour::Red);

// Pick one vertex per clique, in order: the lowest vertex of clique i with
// no `avoid`-coloured edge to any already-picked vertex.  Success yields the
// picks as a clique in the opposite colour; otherwise failed_at names the
// first stuck clique (1-based).  Sizes are not constrained here; with every
// clique of size >= k * (number of cliques) and pairwise cross
// `avoid`-degrees <= k-1 the greedy cannot fail.
AcrossResult greedy_blue_clique_across(const TwoColouring& c,
                                       const std::vector<std::vector<int>>& cliques,
                                       int k, Colour avoid = Colour::Red);

// Hunt a monochromatic copy of construct_case1(n, t, k) inside c: majority
// descent for the first hub set, fraction descent (threshold epsilon) for
// the other, then an exhaustive biclique search among the survivors and
// assembly hub + K_{t,t} + pendants.  FOUND embeddings are validated against
// the target and the colouring; EXHAUSTED names the stage that stalled and
// is a legal outcome whenever c is too small to force a copy.
StrategyReport case1_strategy(const TwoColouring& c, int n, int t, int k,
                              Ratio epsilon = {1, 40});

// Hunt a monochromatic copy of construct_case2(n, t, k) inside c: the same
// double descent, then either a direct K_t search (both hub sets complete)
// or the packed-clique pipeline — disjoint cliques of size k*t in the sparse
// colour, auxiliary digraph, pigeonhole on high in-degree cliques, digraph
// colouring, and a cross-clique greedy in the dense colour.  A K_t of the
// completed hub's colour among the survivors short-circuits to assembly
// first.  Validation and EXHAUSTED semantics as in case 1.
StrategyReport case2_strategy(const TwoColouring& c, int n, int t, int k,
                              Ratio epsilon = {1, 8});

} // namespace ramseykit
