#include "ramseykit/connectivity.hpp"

#include <algorithm>
#include <queue>

#include "ramseykit/errors.hpp"

namespace ramseykit {
namespace {

bool is_complete(const Graph& g) {
    const int n = g.order();
    return g.edge_count() == static_cast<long long>(n) * (n - 1) / 2;
}

// Connectivity of g with the vertices in `removed` deleted, by BFS from the
// first surviving vertex.  Graphs with < 2 surviving vertices count as
// connected (they cannot be split).
bool connected_without(const Graph& g, const Bitset& removed) {
    const int n = g.order();
    int start = -1, alive = 0;
    for (int v = 0; v < n; ++v)
        if (!removed.test(v)) {
            ++alive;
            if (start < 0) start = v;
        }
    if (alive <= 1) return true;
    Bitset seen(n);
    seen.set(start);
    std::vector<int> stack{start};
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        const Bitset& nb = g.neighbours(v);
        for (std::size_t u = nb.find_first(); u < nb.size(); u = nb.next(u + 1))
            if (!removed.test(u) && !seen.test(u)) {
                seen.set(u);
                ++reached;
                stack.push_back(static_cast<int>(u));
            }
    }
    return reached == alive;
}

// Unit-vertex-capacity flow network for one (s,t) pair: vertex v becomes
// in(v)=2v and out(v)=2v+1 with a capacity-1 arc between them (s and t
// excluded), each edge {u,v} becomes out(u)->in(v) and out(v)->in(u).
// Max flow from out(s) to in(t) = number of internally disjoint s-t paths.
class VertexFlow {
public:
    VertexFlow(const Graph& g, int s, int t) : head_(2 * g.order(), -1) {
        const int n = g.order();
        for (int v = 0; v < n; ++v)
            if (v != s && v != t) add_arc(2 * v, 2 * v + 1, 1);
        for (auto [u, v] : g.edges()) {
            add_arc(2 * u + 1, 2 * v, 1);
            add_arc(2 * v + 1, 2 * u, 1);
        }
        src_ = 2 * s + 1;
        dst_ = 2 * t;
    }

    // BFS augmentation; unit capacities keep every augmentation O(arcs).
    int max_flow(int stop_at) {
        int flow = 0;
        while (flow < stop_at && augment()) ++flow;
        return flow;
    }

private:
    struct Arc {
        int to, next, cap;
    };

    void add_arc(int from, int to, int cap) {
        arcs_.push_back({to, head_[from], cap});
        head_[from] = static_cast<int>(arcs_.size()) - 1;
        arcs_.push_back({from, head_[to], 0});
        head_[to] = static_cast<int>(arcs_.size()) - 1;
    }

    bool augment() {
        std::vector<int> via(head_.size(), -1);
        std::queue<int> q;
        q.push(src_);
        via[src_] = -2;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            if (v == dst_) break;
            for (int a = head_[v]; a >= 0; a = arcs_[a].next)
                if (arcs_[a].cap > 0 && via[arcs_[a].to] == -1) {
                    via[arcs_[a].to] = a;
                    q.push(arcs_[a].to);
                }
        }
        if (via[dst_] < 0) return false;
        for (int v = dst_; v != src_;) {
            int a = via[v];
            arcs_[a].cap -= 1;
            arcs_[a ^ 1].cap += 1;
            v = arcs_[a ^ 1].to;
        }
        return true;
    }

    std::vector<int> head_;
    std::vector<Arc> arcs_;
    int src_ = 0, dst_ = 0;
};

int local_connectivity(const Graph& g, int s, int t, int stop_at) {
    VertexFlow f(g, s, t);
    return f.max_flow(stop_at);
}

// kappa only (no certificate).  A minimum cut of size kappa misses at least
// one of the first kappa+1 vertices, so scanning sources v = 0,1,... while
// v <= current best covers some vertex outside a minimum cut.
int compute_kappa(const Graph& g) {
    const int n = g.order();
    int best = n - 1;
    for (int s = 0; s <= best && s < n; ++s)
        for (int t = 0; t < n && s <= best; ++t)
            if (t != s && !g.has_edge(s, t))
                best = std::min(best, local_connectivity(g, s, t, best + 1));
    return best;
}

// Does some minimum cut of the original graph (size kappa) contain all of
// `forced`?  Equivalent to: g minus `forced` still splits with exactly the
// remaining budget.  Deleting vertices cannot create a cheaper cut, so the
// reduced connectivity is >= budget; equality is the feasibility test.
bool extends_to_min_cut(const Graph& g, const std::vector<int>& forced,
                        int kappa) {
    const int budget = kappa - static_cast<int>(forced.size());
    Bitset removed(g.order());
    for (int v : forced) removed.set(v);
    if (budget == 0) return !connected_without(g, removed);
    // Re-index the surviving vertices and recurse into a smaller instance.
    std::vector<int> id(g.order(), -1);
    int m = 0;
    for (int v = 0; v < g.order(); ++v)
        if (!removed.test(v)) id[v] = m++;
    Graph h(m);
    for (auto [u, v] : g.edges())
        if (id[u] >= 0 && id[v] >= 0) h.add_edge(id[u], id[v]);
    if (m < 2 || is_complete(h)) return false;
    return compute_kappa(h) == budget;
}

} // namespace

ConnectivityCertificate vertex_connectivity(const Graph& g) {
    const int n = g.order();
    require(n >= 2, "vertex_connectivity: undefined for graphs on < 2 vertices");

    ConnectivityCertificate cert;
    if (is_complete(g)) {
        cert.kappa = n - 1;
        return cert;
    }

    cert.kappa = compute_kappa(g);

    // First nonadjacent pair (in the kappa scan order) realizing kappa.
    for (int s = 0; s <= cert.kappa && !cert.witness_pair; ++s)
        for (int t = 0; t < n; ++t)
            if (t != s && !g.has_edge(s, t) &&
                local_connectivity(g, s, t, n) == cert.kappa) {
                cert.witness_pair = {s, t};
                break;
            }

    // Lexicographically smallest minimum cut, grown one vertex at a time:
    // each prefix must still extend to a cut of size exactly kappa.
    std::vector<int> cut;
    int from = 0;
    while (static_cast<int>(cut.size()) < cert.kappa) {
        bool grew = false;
        for (int v = from; v < n; ++v) {
            cut.push_back(v);
            if (extends_to_min_cut(g, cut, cert.kappa)) {
                from = v + 1;
                grew = true;
                break;
            }
            cut.pop_back();
        }
        ensure(grew, "vertex_connectivity: failed to extend cut prefix");
    }
    Bitset removed(n);
    for (int v : cut) removed.set(v);
    ensure(!connected_without(g, removed),
           "vertex_connectivity: certificate cut does not disconnect");
    cert.cut = std::move(cut);
    return cert;
}

bool is_k_connected(const Graph& g, int k) {
    const int n = g.order();
    if (n <= k) return false;
    if (k <= 0) return n > k;
    if (n < 2) return false; // n = 1, k >= 1 was caught by n <= k
    if (is_complete(g)) return true;
    return compute_kappa(g) >= k;
}

} // namespace ramseykit
