#include "ramseykit/graph.hpp"

#include <algorithm>

namespace ramseykit {

Graph colour_subgraph(const TwoColouring& c, Colour col) {
    const int n = c.order();
    Graph g(n);
    for (int u = 0; u < n; ++u)
        c.row(col, u).for_each([&](std::size_t v) {
            if (static_cast<int>(v) > u) g.add_edge(u, static_cast<int>(v));
        });
    return g;
}

Graph red_subgraph(const TwoColouring& c) { return colour_subgraph(c, Colour::Red); }
Graph blue_subgraph(const TwoColouring& c) { return colour_subgraph(c, Colour::Blue); }

bool validate_embedding(const Embedding& e, const TwoColouring& c) {
    require(e.host_order == c.order(),
            "validate_embedding: host order " + std::to_string(e.host_order) +
                " does not match colouring order " + std::to_string(c.order()));
    const int p = e.pattern.order();
    if (static_cast<int>(e.map.size()) != p) return false;
    std::vector<bool> used(c.order(), false);
    for (int v : e.map) {
        if (v < 0 || v >= c.order() || used[v]) return false;
        used[v] = true;
    }
    for (auto [a, b] : e.pattern.edges())
        if (c.colour(e.map[a], e.map[b]) != e.colour) return false;
    return true;
}

} // namespace ramseykit
