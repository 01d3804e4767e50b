#include "ramseykit/arrowing.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <string>
#include <thread>

#include "ramseykit/errors.hpp"

namespace ramseykit {
namespace {

// Assignment order for pattern vertices: descending degree, ties by index.
// High-degree vertices first keeps candidate sets small early.
std::vector<int> degree_order(const Graph& pattern) {
    std::vector<int> order(pattern.order());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return pattern.degree(a) > pattern.degree(b);
    });
    return order;
}

// Backtracking subgraph search over bitset adjacency rows.  Host is any type
// with row(v) -> const Bitset& covering vertices 0..host_n-1.  Candidates
// for each pattern vertex are the intersection of the host rows of its
// already-mapped neighbours (all unused vertices when none are mapped yet),
// scanned in ascending order, so the first embedding found is canonical.
template <class Host>
class EmbedSearch {
public:
    EmbedSearch(const Graph& pattern, Host host, int host_n)
        : pat_(pattern), host_(host), host_n_(host_n),
          map_(pattern.order(), -1), used_(host_n) {}

    // Pre-assign pattern vertex p to host vertex h (for edge-pinned search).
    void pin(int p, int h) {
        map_[p] = h;
        used_.set(static_cast<std::size_t>(h));
    }

    bool run(const std::vector<int>& order) { return extend(order, 0); }

    const std::vector<int>& map() const { return map_; }

private:
    bool extend(const std::vector<int>& order, std::size_t depth) {
        if (depth == order.size()) return true;
        int p = order[depth];
        Bitset cand(host_n_);
        bool constrained = false;
        const Bitset& nb = pat_.neighbours(p);
        for (std::size_t q = nb.find_first(); q < nb.size(); q = nb.next(q + 1)) {
            int h = map_[q];
            if (h < 0) continue;
            if (!constrained) {
                cand = host_.row(h);
                constrained = true;
            } else {
                cand &= host_.row(h);
            }
        }
        if (!constrained) cand.set_all();
        cand.subtract(used_);
        for (std::size_t v = cand.find_first(); v < cand.size();
             v = cand.next(v + 1)) {
            map_[p] = static_cast<int>(v);
            used_.set(v);
            if (extend(order, depth + 1)) return true;
            used_.reset(v);
            map_[p] = -1;
        }
        return false;
    }

    const Graph& pat_;
    Host host_; // tiny row-view adapter, held by value
    int host_n_;
    std::vector<int> map_;
    Bitset used_;
};

struct GraphHost {
    const Graph& g;
    const Bitset& row(int v) const { return g.neighbours(v); }
};

struct ColourHost {
    const TwoColouring& c;
    Colour colour;
    const Bitset& row(int v) const { return c.row(colour, v); }
};

// Does `host` contain a copy of `pattern` using edge {u,v}?  Pins each
// pattern edge onto {u,v} in both orientations and extends.  Detects exactly
// the copies created by adding {u,v}, which is all the arrowing DFS needs.
bool contains_copy_through(const Graph& host, const Graph& pattern,
                           const std::vector<int>& order, int u, int v) {
    if (pattern.order() > host.order()) return false;
    for (auto [a, b] : pattern.edges()) {
        for (int swap = 0; swap < 2; ++swap) {
            int hu = swap ? v : u, hv = swap ? u : v;
            EmbedSearch<GraphHost> search(pattern, GraphHost{host}, host.order());
            search.pin(a, hu);
            search.pin(b, hv);
            std::vector<int> rest;
            rest.reserve(order.size());
            for (int p : order)
                if (p != a && p != b) rest.push_back(p);
            if (search.run(rest)) return true;
        }
    }
    return false;
}

// Lexicographic pair order (0,1),(0,2),...,(0,n-1),(1,2),... — the codec's
// bit order, so witnesses are reproducible from their RB encoding.
std::vector<std::pair<int, int>> pair_list(int n) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    return pairs;
}

// One branch of the arrowing search.  Owns its partial colour classes so
// parallel workers never share mutable state.
class ArrowsDfs {
public:
    ArrowsDfs(int n, const Graph& p1, const Graph& p2, bool diagonal)
        : n_(n), p1_(p1), p2_(p2), diagonal_(diagonal), red_(n), blue_(n),
          order1_(degree_order(p1)), order2_(degree_order(p2)),
          pairs_(pair_list(n)) {}

    std::size_t pair_count() const { return pairs_.size(); }

    // Colour pairs [0, depth) according to prefix bits (bit k of `prefix`,
    // counted from the most significant of `depth`, gives pair k: 0 = red).
    // Returns false when the prefix already contains a monochromatic copy.
    bool load_prefix(std::uint64_t prefix, int depth) {
        for (int d = 0; d < depth; ++d) {
            bool blue_bit = (prefix >> (depth - 1 - d)) & 1;
            if (!paint(d, blue_bit ? Colour::Blue : Colour::Red)) return false;
        }
        return true;
    }

    // DFS from pair `depth`; reports the first good colouring in DFS order.
    std::optional<TwoColouring> search(std::size_t depth) {
        if (depth == pairs_.size()) return snapshot();
        for (Colour c : {Colour::Red, Colour::Blue}) {
            if (depth == 0 && diagonal_ && c == Colour::Blue)
                continue; // colour swap: a good colouring exists iff one has pair 0 red
            if (paint(depth, c)) {
                auto w = search(depth + 1);
                if (w) return w;
            }
            unpaint(depth, c);
        }
        return std::nullopt;
    }

private:
    // Returns false (leaving the edge painted) when the new edge completes a
    // monochromatic copy; the caller unpaints on both failure and backtrack.
    bool paint(std::size_t depth, Colour c) {
        auto [i, j] = pairs_[depth];
        Graph& g = (c == Colour::Red) ? red_ : blue_;
        const Graph& pat = (c == Colour::Red) ? p1_ : p2_;
        const auto& ord = (c == Colour::Red) ? order1_ : order2_;
        g.add_edge(i, j);
        return pat.edge_count() == 0 || !contains_copy_through(g, pat, ord, i, j);
    }

    void unpaint(std::size_t depth, Colour c) {
        auto [i, j] = pairs_[depth];
        Graph& g = (c == Colour::Red) ? red_ : blue_;
        g.remove_edge(i, j);
    }

    TwoColouring snapshot() const {
        TwoColouring col(n_);
        for (auto [i, j] : red_.edges()) col.paint(i, j, Colour::Red);
        return col;
    }

    int n_;
    const Graph& p1_;
    const Graph& p2_;
    bool diagonal_;
    Graph red_, blue_;
    std::vector<int> order1_, order2_;
    std::vector<std::pair<int, int>> pairs_;
};

std::optional<TwoColouring> search_parallel(int n, const Graph& p1,
                                            const Graph& p2, bool diagonal,
                                            int threads, int prefix_depth) {
    const std::uint64_t total = std::uint64_t(1) << prefix_depth;
    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> best{total}; // smallest prefix with a witness
    std::mutex result_mutex;
    std::optional<TwoColouring> best_witness;

    auto worker = [&] {
        while (true) {
            std::uint64_t idx = next.fetch_add(1);
            if (idx >= total) return;
            // A later prefix can never beat an already-found witness.
            if (idx >= best.load()) return;
            if (diagonal && ((idx >> (prefix_depth - 1)) & 1) != 0)
                continue; // pair 0 fixed red
            ArrowsDfs dfs(n, p1, p2, diagonal);
            if (!dfs.load_prefix(idx, prefix_depth)) continue;
            auto w = dfs.search(static_cast<std::size_t>(prefix_depth));
            if (!w) continue;
            std::lock_guard<std::mutex> lock(result_mutex);
            if (idx < best.load()) {
                best.store(idx);
                best_witness = std::move(w);
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return best_witness;
}

} // namespace

std::optional<Embedding> find_mono_copy(const TwoColouring& c,
                                        const Graph& pattern, Colour colour) {
    require(pattern.order() <= c.order(),
            "find_mono_copy: pattern larger than host");
    EmbedSearch<ColourHost> search(pattern, ColourHost{c, colour}, c.order());
    if (!search.run(degree_order(pattern))) return std::nullopt;
    return Embedding{pattern, c.order(), search.map(), colour};
}

std::optional<std::vector<int>> find_subgraph(const Graph& host,
                                              const Graph& pattern) {
    if (pattern.order() > host.order()) return std::nullopt;
    EmbedSearch<GraphHost> search(pattern, GraphHost{host}, host.order());
    if (!search.run(degree_order(pattern))) return std::nullopt;
    return search.map();
}

ArrowingResult arrows(int n, const Graph& pattern1, const Graph& pattern2,
                      int threads) {
    require(n >= 0, "arrows: n must be non-negative");
    if (n > kArrowsCap)
        throw CapacityError("arrows: exhaustive search is capped at N <= " +
                            std::to_string(kArrowsCap) + ", requested N = " +
                            std::to_string(n));

    // An edgeless pattern sits inside either colour class of any colouring
    // as soon as the host has enough vertices.
    if ((pattern1.edge_count() == 0 && pattern1.order() <= n) ||
        (pattern2.edge_count() == 0 && pattern2.order() <= n))
        return {true, std::nullopt};

    const bool diagonal = pattern1 == pattern2;
    ArrowsDfs probe(n, pattern1, pattern2, diagonal);
    const std::size_t npairs = probe.pair_count();

    std::optional<TwoColouring> witness;
    // Prefix splitting pays off only when the subtrees dominate the replays.
    constexpr int kPrefixDepth = 10;
    if (threads > 1 && npairs > kPrefixDepth + 4) {
        witness = search_parallel(n, pattern1, pattern2, diagonal, threads,
                                  kPrefixDepth);
    } else {
        witness = probe.search(0);
    }
    if (witness) return {false, std::move(witness)};
    return {true, std::nullopt};
}

RamseyValue ramsey_number(const Graph& pattern, int cap, int threads) {
    require(cap >= 1, "ramsey_number: cap must be >= 1");
    RamseyValue rv;
    rv.cap = cap;
    std::optional<TwoColouring> last;
    for (int n = 1; n <= cap; ++n) {
        if (n > kArrowsCap)
            throw CapacityError(
                "ramsey_number: exhaustive search is capped at N <= " +
                std::to_string(kArrowsCap) + "; verified so far: r >= " +
                std::to_string(n) + " (witness at N = " + std::to_string(n - 1) +
                ")");
        ArrowingResult r = arrows(n, pattern, pattern, threads);
        if (r.holds) {
            rv.value = n;
            rv.lower_bound = n;
            rv.witness = std::move(last);
            return rv;
        }
        last = std::move(r.witness);
    }
    rv.lower_bound = cap + 1;
    rv.witness = std::move(last);
    return rv;
}

} // namespace ramseykit
