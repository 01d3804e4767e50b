#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ramseykit/graph.hpp"

namespace ramseykit {

// Exact vertex connectivity with an auditable certificate: a minimum vertex
// cut (absent exactly when the graph is complete, where kappa = n-1 by
// convention) and a nonadjacent pair realizing kappa as its max number of
// internally vertex-disjoint paths.
struct ConnectivityCertificate {
    int kappa = 0;
    std::optional<std::vector<int>> cut;             // lexicographically smallest minimum cut
    std::optional<std::pair<int, int>> witness_pair; // (s,t) achieving kappa
};

// Menger via unit-vertex-capacity max flow (vertices split into in/out
// nodes).  Deterministic: the scan order is fixed and cut ties are broken by
// the lexicographically smallest cut.  Throws ParameterError when n < 2.
ConnectivityCertificate vertex_connectivity(const Graph& g);

// True iff g has more than k vertices and no vertex cut of size < k.
bool is_k_connected(const Graph& g, int k);

} // namespace ramseykit
