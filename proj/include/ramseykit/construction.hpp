#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ramseykit/graph.hpp"

namespace ramseykit {

// Case 1 builds around a biclique K_{t,t}, Case 2 around a clique K_t.
enum class ConstructionCase { Biclique, Clique };

// Parameters of one family member G_n: n vertices, side/order t, hub size k.
// The hub is fixed canonically at vertices 0..k-1 (any choice is isomorphic).
struct ConstructionParams {
    int n = 0, t = 0, k = 0;
    ConstructionCase kind = ConstructionCase::Clique;
    std::vector<int> hub;

    static ConstructionParams make(int n, int t, int k, ConstructionCase kind);
};

// How select_t decides "r > f(n)": EXP_LOWER uses the exponential lower
// bound 2^{t/2} (conservative proxy, may overshoot the minimal t); EXACT
// computes true Ramsey numbers by exhaustive search up to `cap` vertices.
struct BoundProxy {
    enum class Kind { ExpLower, Exact };
    Kind kind = Kind::ExpLower;
    int cap = 8; // EXACT only: largest host order the search may visit

    static BoundProxy exp_lower() { return {Kind::ExpLower, 0}; }
    static BoundProxy exact(int cap = 8) { return {Kind::Exact, cap}; }
};

// Case 1: parts A = {0..t-1} (hub = {0..k-1} inside A), B = {t..2t-1},
// pendants {2t..n-1}; edges = all of A x B plus all hub x pendant pairs.
// Edge count t^2 + k(n-2t).
Graph construct_case1(const ConstructionParams& p);

// Case 2: clique {0..t-1} (hub = {0..k-1} inside it), pendants {t..n-1};
// edges = clique pairs plus all hub x pendant pairs.
// Edge count t(t-1)/2 + k(n-t).
Graph construct_case2(const ConstructionParams& p);

// Smallest t whose clique (K_t) or biclique (K_{t,t}) Ramsey number provably
// exceeds fn_value under the chosen proxy.  EXP_LOWER: smallest t with
// 2^{t/2} > fn_value.  EXACT: smallest t with r > fn_value decided by
// exhaustive search; undecidable instances raise CapacityError carrying the
// partial bracket.
int select_t(long long fn_value, ConstructionCase pattern, BoundProxy proxy);

// Compose the case split with select_t: Case 1 when fn_value <= 2^{n/8}
// (compared exactly as fn^8 <= 2^n), Case 2 otherwise; t is raised to k+1
// when select_t lands below it (sound: r is monotone in t).  Incompatible
// (n, t) raises CapacityError naming the broken inequality.  `force` pins
// the case instead of the threshold split; t selection is unchanged.
std::pair<Graph, ConstructionParams> build_family_member(
    int n, int k, long long fn_value, BoundProxy proxy,
    std::optional<ConstructionCase> force = std::nullopt);

} // namespace ramseykit
