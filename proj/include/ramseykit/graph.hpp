#pragma once

#include <string>
#include <vector>

#include "ramseykit/bitset.hpp"
#include "ramseykit/errors.hpp"

namespace ramseykit {

enum class Colour { Red, Blue };

inline Colour opposite(Colour c) { return c == Colour::Red ? Colour::Blue : Colour::Red; }
inline const char* colour_name(Colour c) { return c == Colour::Red ? "red" : "blue"; }

// Undirected simple graph on vertices 0..n-1 with bitset adjacency rows.
// No self-loops; adjacency is kept symmetric by add_edge.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(n, Bitset(n)) {}

    int order() const { return n_; }

    void add_edge(int u, int v) {
        require(u != v, "add_edge: self-loop rejected");
        require(0 <= u && u < n_ && 0 <= v && v < n_, "add_edge: vertex out of range");
        adj_[u].set(v);
        adj_[v].set(u);
    }

    void remove_edge(int u, int v) {
        require(0 <= u && u < n_ && 0 <= v && v < n_, "remove_edge: vertex out of range");
        adj_[u].reset(v);
        adj_[v].reset(u);
    }

    bool has_edge(int u, int v) const {
        return u != v && adj_[u].test(v);
    }

    const Bitset& neighbours(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].count()); }

    long long edge_count() const {
        long long twice = 0;
        for (const auto& row : adj_) twice += static_cast<long long>(row.count());
        return twice / 2;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            adj_[u].for_each([&](std::size_t v) {
                if (static_cast<int>(v) > u) out.emplace_back(u, static_cast<int>(v));
            });
        return out;
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

    static Graph complete(int n) {
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
        return g;
    }
    static Graph empty(int n) { return Graph(n); }
    // parts {0..a-1} and {a..a+b-1}
    static Graph complete_bipartite(int a, int b) {
        Graph g(a + b);
        for (int u = 0; u < a; ++u)
            for (int v = a; v < a + b; ++v) g.add_edge(u, v);
        return g;
    }
    static Graph path(int n) {
        Graph g(n);
        for (int u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
        return g;
    }
    static Graph cycle(int n) {
        Graph g = path(n);
        if (n >= 3) g.add_edge(n - 1, 0);
        return g;
    }
    // K_{1,leaves}: centre 0
    static Graph star(int leaves) {
        Graph g(leaves + 1);
        for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
        return g;
    }

private:
    int n_ = 0;
    std::vector<Bitset> adj_;
};

// Red/blue edge 2-colouring of K_N. Each unordered pair {i,j} carries
// exactly one colour; both colour classes are stored as adjacency rows so
// either neighbourhood is a single bitset.
class TwoColouring {
public:
    TwoColouring() = default;

    // Starts all-blue; painting is only meaningful during construction.
    explicit TwoColouring(int n) : n_(n), red_(n, Bitset(n)), blue_(n, Bitset(n)) {
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v) blue_[u].set(v);
    }

    int order() const { return n_; }

    void paint(int u, int v, Colour c) {
        require(u != v && 0 <= u && u < n_ && 0 <= v && v < n_,
                "paint: invalid pair");
        if (c == Colour::Red) {
            red_[u].set(v); red_[v].set(u);
            blue_[u].reset(v); blue_[v].reset(u);
        } else {
            blue_[u].set(v); blue_[v].set(u);
            red_[u].reset(v); red_[v].reset(u);
        }
    }

    Colour colour(int u, int v) const {
        require(u != v && 0 <= u && u < n_ && 0 <= v && v < n_,
                "colour: invalid pair");
        return red_[u].test(v) ? Colour::Red : Colour::Blue;
    }

    const Bitset& row(Colour c, int v) const {
        return c == Colour::Red ? red_[v] : blue_[v];
    }
    const Bitset& red_row(int v) const { return red_[v]; }
    const Bitset& blue_row(int v) const { return blue_[v]; }

    long long count(Colour c) const {
        long long twice = 0;
        for (int v = 0; v < n_; ++v)
            twice += static_cast<long long>(row(c, v).count());
        return twice / 2;
    }

    bool operator==(const TwoColouring& o) const {
        return n_ == o.n_ && red_ == o.red_;
    }

    static TwoColouring all_of(int n, Colour c) {
        TwoColouring col(n);
        if (c == Colour::Red)
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) col.paint(u, v, Colour::Red);
        return col;
    }
    static TwoColouring all_red(int n) { return all_of(n, Colour::Red); }
    static TwoColouring all_blue(int n) { return all_of(n, Colour::Blue); }

    // C_5 edges {i, i+1 mod 5} red, the rest blue: the classic r(K_3) witness.
    static TwoColouring pentagon() {
        TwoColouring col(5);
        for (int i = 0; i < 5; ++i) col.paint(i, (i + 1) % 5, Colour::Red);
        return col;
    }

private:
    int n_ = 0;
    std::vector<Bitset> red_, blue_;
};

// Directed graph without self-arcs.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(int n) : n_(n), out_(n, Bitset(n)), in_(n, Bitset(n)) {}

    int order() const { return n_; }

    void add_arc(int u, int v) {
        require(u != v, "add_arc: self-arc rejected");
        require(0 <= u && u < n_ && 0 <= v && v < n_, "add_arc: vertex out of range");
        out_[u].set(v);
        in_[v].set(u);
    }

    bool has_arc(int u, int v) const { return u != v && out_[u].test(v); }

    const Bitset& out_neighbours(int v) const { return out_[v]; }
    const Bitset& in_neighbours(int v) const { return in_[v]; }
    int out_degree(int v) const { return static_cast<int>(out_[v].count()); }
    int in_degree(int v) const { return static_cast<int>(in_[v].count()); }

    int max_in_degree() const {
        int d = 0;
        for (int v = 0; v < n_; ++v) d = std::max(d, in_degree(v));
        return d;
    }

    long long arc_count() const {
        long long c = 0;
        for (int v = 0; v < n_; ++v) c += out_degree(v);
        return c;
    }

    Graph underlying() const {
        Graph g(n_);
        for (int u = 0; u < n_; ++u)
            out_[u].for_each([&](std::size_t v) {
                if (static_cast<int>(v) != u) g.add_edge(u, static_cast<int>(v));
            });
        return g;
    }

private:
    int n_ = 0;
    std::vector<Bitset> out_, in_;
};

// Injective vertex map certifying a monochromatic copy of `pattern` inside
// a colouring of K_{host_order}.
struct Embedding {
    Graph pattern;
    int host_order = 0;
    std::vector<int> map; // pattern vertex -> host vertex
    Colour colour = Colour::Red;
};

// Graph of one colour class.
Graph red_subgraph(const TwoColouring& c);
Graph blue_subgraph(const TwoColouring& c);
Graph colour_subgraph(const TwoColouring& c, Colour col);

// Certificate checker: true iff e.map is injective and every pattern edge
// lands on a host pair of colour e.colour. Host-order mismatch is an error,
// not `false`.
bool validate_embedding(const Embedding& e, const TwoColouring& c);

} // namespace ramseykit
