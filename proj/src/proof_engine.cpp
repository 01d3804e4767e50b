#include "ramseykit/proof_engine.hpp"

#include <algorithm>
#include <climits>
#include <limits>
#include <string>
#include <utility>

#include "ramseykit/arrowing.hpp"
#include "ramseykit/construction.hpp"
#include "ramseykit/errors.hpp"

namespace ramseykit {
namespace {

void check_epsilon(Ratio eps, const char* who) {
    require(eps.num >= 1 && eps.den >= 1 && eps.num < eps.den,
            std::string(who) + ": requires epsilon in (0, 1)");
}

// Colouring induced on `verts`; vertex i of the result is verts[i].
TwoColouring induce(const TwoColouring& c, const std::vector<int>& verts) {
    TwoColouring ind(static_cast<int>(verts.size()));
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            ind.paint(static_cast<int>(i), static_cast<int>(j),
                      c.colour(verts[i], verts[j]));
    return ind;
}

// find_mono_copy restricted to the vertex set u; returns the pattern -> host
// map in host labels, first copy in the induced search order.
std::optional<std::vector<int>> find_mono_in(const TwoColouring& c,
                                             const Bitset& u,
                                             const Graph& pattern,
                                             Colour colour) {
    const std::vector<int> verts = u.to_vector();
    if (pattern.order() > static_cast<int>(verts.size())) return std::nullopt;
    auto emb = find_mono_copy(induce(c, verts), pattern, colour);
    if (!emb) return std::nullopt;
    std::vector<int> map;
    map.reserve(emb->map.size());
    for (int v : emb->map) map.push_back(verts[v]);
    return map;
}

unsigned long long sat_mul(unsigned long long a, unsigned long long b) {
    if (a != 0 && b > ULLONG_MAX / a) return ULLONG_MAX;
    return a * b;
}

StageRecord& push_stage(StrategyReport& rep, const char* name) {
    rep.stages.push_back(StageRecord{name, {}, {}, ""});
    return rep.stages.back();
}

} // namespace

DescentState majority_descent(const TwoColouring& c, int k) {
    const int n = c.order();
    require(n >= 1, "majority_descent: requires N >= 1");
    require(k >= 1, "majority_descent: requires k >= 1");

    DescentState st{Bitset(n), Bitset(n), Bitset(n), {}};
    st.U.set_all();
    while (static_cast<int>(st.R.count()) < k &&
           static_cast<int>(st.B.count()) < k && st.U.any()) {
        const int v = static_cast<int>(st.U.find_first());
        Bitset red = c.red_row(v);
        red &= st.U;
        Bitset blue = c.blue_row(v);
        blue &= st.U;
        // v sits in neither of its own rows, so both sets already exclude it
        if (red.count() >= blue.count()) {
            st.R.set(v);
            st.U = std::move(red);
            st.trace.push_back({v, Colour::Red, static_cast<int>(st.U.count())});
        } else {
            st.B.set(v);
            st.U = std::move(blue);
            st.trace.push_back({v, Colour::Blue, static_cast<int>(st.U.count())});
        }
    }

    const int steps = static_cast<int>(st.trace.size());
    ensure(steps <= 2 * k - 1, "majority_descent: step bound 2k-1 violated");
    // |U| >= N/2^s - 2, exactly: (|U| + 2) * 2^s >= N
    if (steps < 62)
        ensure(((static_cast<long long>(st.U.count()) + 2) << steps) >= n,
               "majority_descent: survivor bound N/2^s - 2 violated");
    return st;
}

FractionResult fraction_descent(const TwoColouring& c, const Bitset& start_u,
                                int k_needed, Ratio epsilon, Colour colour) {
    require(start_u.any(), "fraction_descent: requires a nonempty starting set");
    require(k_needed >= 0, "fraction_descent: requires k_needed >= 0");
    require(static_cast<int>(start_u.size()) == c.order(),
            "fraction_descent: vertex set does not match the colouring");
    check_epsilon(epsilon, "fraction_descent");

    FractionResult fr{Bitset(c.order()), start_u, {}};
    while (static_cast<int>(fr.extra.count()) < k_needed && fr.u_final.any()) {
        int best = -1;
        long long best_deg = -1;
        for (std::size_t v = fr.u_final.find_first(); v < fr.u_final.size();
             v = fr.u_final.next(v + 1)) {
            const long long deg = static_cast<long long>(
                c.row(colour, static_cast<int>(v)).count_and(fr.u_final));
            if (deg > best_deg) { // strict: keeps the lowest-index maximizer
                best_deg = deg;
                best = static_cast<int>(v);
            }
        }
        // qualify iff deg >= epsilon * |U|, exactly
        if (static_cast<__int128>(epsilon.den) * best_deg <
            static_cast<__int128>(epsilon.num) *
                static_cast<long long>(fr.u_final.count()))
            break;
        fr.extra.set(best);
        Bitset nb = c.row(colour, best);
        nb &= fr.u_final;
        fr.u_final = std::move(nb);
        fr.trace.push_back({best, colour, static_cast<int>(fr.u_final.count())});
    }
    return fr;
}

Embedding greedy_sparse_clique(const TwoColouring& c, const Bitset& u,
                               Colour sparse_colour) {
    require(u.any(), "greedy_sparse_clique: requires a nonempty vertex set");
    require(static_cast<int>(u.size()) == c.order(),
            "greedy_sparse_clique: vertex set does not match the colouring");

    long long d = 0;
    for (std::size_t v = u.find_first(); v < u.size(); v = u.next(v + 1))
        d = std::max(d, static_cast<long long>(
                            c.row(sparse_colour, static_cast<int>(v)).count_and(u)));

    Bitset pool = u;
    std::vector<int> picks;
    while (pool.any()) {
        int best = -1;
        long long best_deg = std::numeric_limits<long long>::max();
        for (std::size_t v = pool.find_first(); v < pool.size();
             v = pool.next(v + 1)) {
            const long long deg = static_cast<long long>(
                c.row(sparse_colour, static_cast<int>(v)).count_and(pool));
            if (deg < best_deg) { // strict: keeps the lowest-index minimizer
                best_deg = deg;
                best = static_cast<int>(v);
            }
        }
        picks.push_back(best);
        Bitset drop = c.row(sparse_colour, best);
        drop &= pool;
        pool.subtract(drop);
        pool.reset(best);
    }

    const std::size_t need = (u.count() + d) / (d + 1); // ceil(|U| / (d+1))
    ensure(picks.size() >= need,
           "greedy_sparse_clique: size bound ceil(|U|/(d+1)) violated");
    Embedding e{Graph::complete(static_cast<int>(picks.size())), c.order(),
                std::move(picks), opposite(sparse_colour)};
    ensure(validate_embedding(e, c),
           "greedy_sparse_clique: picks are not a clique in the opposite colour");
    return e;
}

PackingResult clique_packing(const TwoColouring& c, const Bitset& u,
                             int size_each, int count, Colour colour,
                             int exact_width) {
    require(size_each >= 1, "clique_packing: requires size_each >= 1");
    require(count >= 1, "clique_packing: requires count >= 1");
    require(exact_width >= 0, "clique_packing: requires exact_width >= 0");
    require(static_cast<int>(u.size()) == c.order(),
            "clique_packing: vertex set does not match the colouring");

    PackingResult res{CliquePacking{{}, colour, size_each}, count};
    Bitset pool = u;
    while (res.achieved() < count && pool.any()) {
        std::optional<std::vector<int>> got;
        Embedding g = greedy_sparse_clique(c, pool, opposite(colour));
        if (static_cast<int>(g.map.size()) >= size_each)
            got.emplace(g.map.begin(), g.map.begin() + size_each);
        else if (static_cast<int>(pool.count()) <= exact_width)
            got = find_mono_in(c, pool, Graph::complete(size_each), colour);
        if (!got) break;
        std::sort(got->begin(), got->end());
        for (int v : *got) pool.reset(v);
        res.packing.cliques.push_back(std::move(*got));
    }
    return res;
}

Digraph build_aux_digraph(const TwoColouring& c, const CliquePacking& packing,
                          int k, Colour colour) {
    require(k >= 1, "build_aux_digraph: requires k >= 1");
    const int n = c.order();
    const int m = static_cast<int>(packing.cliques.size());

    std::vector<Bitset> mask(m, Bitset(n));
    for (int i = 0; i < m; ++i)
        for (int v : packing.cliques[i]) {
            require(0 <= v && v < n, "build_aux_digraph: clique vertex out of range");
            mask[i].set(v);
        }

    Digraph d(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (i == j) continue;
            for (int v : packing.cliques[i])
                if (static_cast<int>(c.row(colour, v).count_and(mask[j])) >= k) {
                    d.add_arc(i, j);
                    break;
                }
        }
    return d;
}

DigraphColouring digraph_colouring(const Digraph& d) {
    const int n = d.order();
    DigraphColouring out{std::vector<int>(n, -1), std::vector<int>(n, -1), 0};
    if (n == 0) return out;

    // Elimination ordering, built back to front: each round removes the
    // lowest-index vertex whose out-degree among the remaining vertices is
    // at most D and places it after everything still unremoved.
    const long long cap = d.max_in_degree();
    Bitset remaining(n);
    remaining.set_all();
    for (int pos = n - 1; pos >= 0; --pos) {
        int pick = -1;
        for (std::size_t v = remaining.find_first(); v < remaining.size();
             v = remaining.next(v + 1)) {
            if (static_cast<long long>(d.out_neighbours(static_cast<int>(v))
                                           .count_and(remaining)) <= cap) {
                pick = static_cast<int>(v);
                break;
            }
        }
        // total remaining out-degree = total remaining in-degree <= |rem|*D,
        // so a qualifying vertex always exists
        ensure(pick >= 0, "digraph_colouring: no vertex of out-degree <= D remains");
        out.order[pos] = pick;
        remaining.reset(pick);
    }

    const Graph und = d.underlying();
    std::vector<int> pos_of(n, -1);
    for (int p = 0; p < n; ++p) pos_of[out.order[p]] = p;

    for (int p = 0; p < n; ++p) {
        const int v = out.order[p];
        std::vector<char> used(static_cast<std::size_t>(2 * cap + 2), 0);
        long long preceding = 0;
        und.neighbours(v).for_each([&](std::size_t w) {
            if (pos_of[w] < p) {
                ++preceding;
                used[static_cast<std::size_t>(out.colour[w])] = 1;
            }
        });
        ensure(preceding <= 2 * cap,
               "digraph_colouring: more than 2D neighbours precede a vertex");
        int col = 0;
        while (used[col]) ++col;
        out.colour[v] = col;
        out.colours_used = std::max(out.colours_used, col + 1);
    }

    ensure(out.colours_used <= 2 * cap + 1,
           "digraph_colouring: colour bound 2D+1 violated");
    for (int v = 0; v < n; ++v)
        und.neighbours(v).for_each([&](std::size_t w) {
            ensure(out.colour[v] != out.colour[w],
                   "digraph_colouring: colouring not proper");
        });
    return out;
}

std::optional<PigeonholeHit> pigeonhole_extract(const TwoColouring& c,
                                                const std::vector<int>& q,
                                                int k, int n_target,
                                                Colour colour) {
    require(k >= 1, "pigeonhole_extract: requires k >= 1");
    require(static_cast<int>(q.size()) >= k, "pigeonhole_extract: requires |Q| >= k");
    const int n = c.order();

    std::vector<int> qs = q;
    std::sort(qs.begin(), qs.end());
    require(std::adjacent_find(qs.begin(), qs.end()) == qs.end(),
            "pigeonhole_extract: Q lists a vertex twice");
    Bitset qmask(n);
    for (int v : qs) {
        require(0 <= v && v < n, "pigeonhole_extract: vertex out of range");
        qmask.set(v);
    }

    const int m = static_cast<int>(qs.size());
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        Bitset common(n);
        common.set_all();
        for (int i : idx) common &= c.row(colour, qs[i]);
        common.subtract(qmask);
        if (static_cast<int>(common.count()) >= n_target - k) {
            std::vector<int> hub;
            hub.reserve(k);
            for (int i : idx) hub.push_back(qs[i]);
            return PigeonholeHit{std::move(hub), std::move(common)};
        }
        int i = k - 1;
        while (i >= 0 && idx[i] == m - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return std::nullopt;
}

AcrossResult greedy_blue_clique_across(const TwoColouring& c,
                                       const std::vector<std::vector<int>>& cliques,
                                       int k, Colour avoid) {
    require(!cliques.empty(), "greedy_blue_clique_across: requires at least one clique");
    require(k >= 1, "greedy_blue_clique_across: requires k >= 1");

    std::vector<int> picks;
    for (std::size_t i = 0; i < cliques.size(); ++i) {
        require(!cliques[i].empty(), "greedy_blue_clique_across: empty clique");
        std::vector<int> sorted = cliques[i];
        std::sort(sorted.begin(), sorted.end());
        int pick = -1;
        for (int v : sorted) {
            bool ok = true;
            for (int u : picks)
                if (u == v || c.colour(u, v) == avoid) {
                    ok = false;
                    break;
                }
            if (ok) {
                pick = v;
                break;
            }
        }
        if (pick < 0) return {std::nullopt, static_cast<int>(i) + 1};
        picks.push_back(pick);
    }

    Embedding e{Graph::complete(static_cast<int>(picks.size())), c.order(),
                std::move(picks), opposite(avoid)};
    ensure(validate_embedding(e, c),
           "greedy_blue_clique_across: picks are not monochromatic in the target colour");
    return {std::move(e), 0};
}

namespace {

// Outcome of the shared double descent: which colour filled its hub set
// during the majority phase, the merged hub sets, and the survivors.
struct DescentOutcome {
    Colour major = Colour::Red; // hub colour completed by majority descent
    Colour minor = Colour::Blue;
    Bitset major_hub, minor_hub, u;
    bool minor_complete = false;
};

// Runs majority + fraction descent, recording both stages.  Returns nullopt
// (with rep.exhausted_stage set) when no hub set can be completed.
std::optional<DescentOutcome> run_double_descent(StrategyReport& rep,
                                                 const TwoColouring& c, int k,
                                                 Ratio epsilon) {
    DescentState ds = majority_descent(c, k);
    StageRecord& s1 = push_stage(rep, "majority-descent");
    s1.params["k"] = k;
    s1.sizes["steps"] = static_cast<long long>(ds.trace.size());
    s1.sizes["red_hubs"] = static_cast<long long>(ds.R.count());
    s1.sizes["blue_hubs"] = static_cast<long long>(ds.B.count());
    s1.sizes["survivors"] = static_cast<long long>(ds.U.count());

    const bool red_done = static_cast<int>(ds.R.count()) == k;
    const bool blue_done = static_cast<int>(ds.B.count()) == k;
    if (!red_done && !blue_done) {
        s1.outcome = "exhausted";
        rep.exhausted_stage = "majority-descent";
        return std::nullopt;
    }
    s1.outcome = red_done ? "red-complete" : "blue-complete";

    DescentOutcome oc;
    oc.major = red_done ? Colour::Red : Colour::Blue;
    oc.minor = opposite(oc.major);
    oc.major_hub = red_done ? ds.R : ds.B;
    oc.minor_hub = red_done ? ds.B : ds.R;
    oc.u = ds.U;

    const int need = k - static_cast<int>(oc.minor_hub.count());
    StageRecord& s2 = push_stage(rep, "fraction-descent");
    s2.params["k_needed"] = need;
    s2.params["epsilon_num"] = epsilon.num;
    s2.params["epsilon_den"] = epsilon.den;
    if (!oc.u.any()) {
        s2.sizes["survivors"] = 0;
        s2.outcome = "skipped";
        rep.exhausted_stage = "fraction-descent";
        return std::nullopt;
    }
    FractionResult fr = fraction_descent(c, oc.u, need, epsilon, oc.minor);
    oc.u = fr.u_final;
    oc.minor_hub |= fr.extra;
    oc.minor_complete = static_cast<int>(oc.minor_hub.count()) == k;
    s2.sizes["extra_hubs"] = static_cast<long long>(fr.extra.count());
    s2.sizes["survivors"] = static_cast<long long>(oc.u.count());
    s2.outcome = oc.minor_complete ? "complete" : "stalled";
    return oc;
}

// Collect up to `want` vertices of pool, ascending, skipping `used`.
std::vector<int> take_pendants(const Bitset& pool, const Bitset& used, int want) {
    std::vector<int> out;
    for (std::size_t v = pool.find_first();
         v < pool.size() && static_cast<int>(out.size()) < want;
         v = pool.next(v + 1))
        if (!used.test(v)) out.push_back(static_cast<int>(v));
    return out;
}

// Fills hub + biclique + pendant slots of the biclique-case target and
// validates.  Returns false (recording the shortage) when the pendant pool
// cannot cover n - 2t vertices.
bool assemble_biclique_copy(StrategyReport& rep, const TwoColouring& c,
                            const Graph& target, int n, int t, int k,
                            Colour col, const Bitset& hub,
                            const std::vector<int>& copy, const Bitset& u) {
    std::vector<int> X(copy.begin(), copy.begin() + t);
    std::vector<int> Y(copy.begin() + t, copy.end());
    std::sort(X.begin(), X.end());
    std::sort(Y.begin(), Y.end());

    std::vector<int> map(n, -1);
    const std::vector<int> hubv = hub.to_vector();
    for (int i = 0; i < k; ++i) map[i] = hubv[i];
    Bitset used(c.order());
    for (int i = 0; i < t - k; ++i) { // hub replaces k vertices of side X
        map[k + i] = X[i];
        used.set(X[i]);
    }
    for (int i = 0; i < t; ++i) {
        map[t + i] = Y[i];
        used.set(Y[i]);
    }

    StageRecord& st = push_stage(rep, "assembly");
    st.sizes["pendants_needed"] = n - 2 * t;
    st.sizes["pendants_available"] =
        static_cast<long long>(u.count() - u.count_and(used));
    const std::vector<int> pend = take_pendants(u, used, n - 2 * t);
    if (static_cast<int>(pend.size()) < n - 2 * t) {
        st.outcome = "short";
        rep.exhausted_stage = "assembly";
        return false;
    }
    for (std::size_t i = 0; i < pend.size(); ++i)
        map[2 * t + static_cast<int>(i)] = pend[i];

    Embedding e{target, c.order(), std::move(map), col};
    ensure(validate_embedding(e, c),
           "case1_strategy: assembled embedding failed validation");
    st.outcome = "ok";
    rep.found = true;
    rep.embedding = std::move(e);
    return true;
}

// Fills hub + clique + pendant slots of the clique-case target and
// validates.  `core` supplies the t-k non-hub clique vertices; pendants are
// drawn from `pool` minus `used`.
bool assemble_clique_copy(StrategyReport& rep, const TwoColouring& c,
                          const Graph& target, int n, int t, int k, Colour col,
                          const std::vector<int>& hubv,
                          const std::vector<int>& core, const Bitset& pool,
                          const Bitset& used) {
    std::vector<int> map(n, -1);
    for (int i = 0; i < k; ++i) map[i] = hubv[i];
    for (int i = 0; i < t - k; ++i) map[k + i] = core[i];

    StageRecord& st = push_stage(rep, "assembly");
    st.sizes["pendants_needed"] = n - t;
    st.sizes["pendants_available"] =
        static_cast<long long>(pool.count() - pool.count_and(used));
    const std::vector<int> pend = take_pendants(pool, used, n - t);
    if (static_cast<int>(pend.size()) < n - t) {
        st.outcome = "short";
        rep.exhausted_stage = "assembly";
        return false;
    }
    for (std::size_t i = 0; i < pend.size(); ++i)
        map[t + static_cast<int>(i)] = pend[i];

    Embedding e{target, c.order(), std::move(map), col};
    ensure(validate_embedding(e, c),
           "case2_strategy: assembled embedding failed validation");
    st.outcome = "ok";
    rep.found = true;
    rep.embedding = std::move(e);
    return true;
}

// Clique-case assembly where the t - k non-hub clique slots come from a
// found monochromatic K_t (any t - k of it work) and pendants from u.
bool assemble_clique_from_kt(StrategyReport& rep, const TwoColouring& c,
                             const Graph& target, int n, int t, int k,
                             Colour col, const Bitset& hub,
                             const std::vector<int>& kt_copy, const Bitset& u) {
    std::vector<int> cl = kt_copy;
    std::sort(cl.begin(), cl.end());
    const std::vector<int> core(cl.begin(), cl.begin() + (t - k));
    Bitset used(c.order());
    for (int v : core) used.set(v);
    return assemble_clique_copy(rep, c, target, n, t, k, col, hub.to_vector(),
                                core, u, used);
}

} // namespace

StrategyReport case1_strategy(const TwoColouring& c, int n, int t, int k,
                              Ratio epsilon) {
    const ConstructionParams params =
        ConstructionParams::make(n, t, k, ConstructionCase::Biclique);
    const Graph target = construct_case1(params); // validates n, t, k
    check_epsilon(epsilon, "case1_strategy");

    StrategyReport rep;
    auto oc = run_double_descent(rep, c, k, epsilon);
    if (!oc) return rep;

    StageRecord& s3 = push_stage(rep, "biclique-search");
    s3.params["t"] = t;
    s3.sizes["survivors"] = static_cast<long long>(oc->u.count());
    // Both hub sets complete: either colour can host the copy; try red
    // first.  Otherwise only the majority colour has a full hub set.
    std::vector<Colour> tries;
    if (oc->minor_complete)
        tries = {Colour::Red, Colour::Blue};
    else
        tries = {oc->major};
    for (Colour col : tries) {
        auto copy = find_mono_in(c, oc->u, Graph::complete_bipartite(t, t), col);
        if (!copy) continue;
        s3.outcome = std::string("found-") + colour_name(col);
        const Bitset& hub = (col == oc->major) ? oc->major_hub : oc->minor_hub;
        assemble_biclique_copy(rep, c, target, n, t, k, col, hub, *copy, oc->u);
        return rep;
    }
    s3.outcome = "none";
    rep.exhausted_stage = "biclique-search";
    return rep;
}

StrategyReport case2_strategy(const TwoColouring& c, int n, int t, int k,
                              Ratio epsilon) {
    const ConstructionParams params =
        ConstructionParams::make(n, t, k, ConstructionCase::Clique);
    const Graph target = construct_case2(params); // validates n, t, k
    check_epsilon(epsilon, "case2_strategy");
    require(epsilon.num <= epsilon.den / 2,
            "case2_strategy: requires epsilon <= 1/2");

    StrategyReport rep;
    auto oc = run_double_descent(rep, c, k, epsilon);
    if (!oc) return rep;
    const Graph kt = Graph::complete(t);

    if (oc->minor_complete) {
        // Both hub sets complete: a K_t of either colour finishes the copy.
        StageRecord& s3 = push_stage(rep, "clique-search");
        s3.params["t"] = t;
        s3.sizes["survivors"] = static_cast<long long>(oc->u.count());
        for (Colour col : {Colour::Red, Colour::Blue}) {
            auto copy = find_mono_in(c, oc->u, kt, col);
            if (!copy) continue;
            s3.outcome = std::string("found-") + colour_name(col);
            const Bitset& hub = (col == oc->major) ? oc->major_hub : oc->minor_hub;
            assemble_clique_from_kt(rep, c, target, n, t, k, col, hub, *copy,
                                    oc->u);
            return rep;
        }
        s3.outcome = "none";
        rep.exhausted_stage = "clique-search";
        return rep;
    }

    // Fraction descent stalled: survivors are sparse in the minor colour.
    const Colour sparse = oc->minor;

    // A K_t of the majority colour among the survivors completes the copy
    // immediately — the packed-clique pipeline assumes there is none.
    StageRecord& s3 = push_stage(rep, "hub-clique-check");
    s3.params["t"] = t;
    s3.sizes["survivors"] = static_cast<long long>(oc->u.count());
    if (auto copy = find_mono_in(c, oc->u, kt, oc->major)) {
        s3.outcome = std::string("found-") + colour_name(oc->major);
        assemble_clique_from_kt(rep, c, target, n, t, k, oc->major,
                                oc->major_hub, *copy, oc->u);
        return rep;
    }
    s3.outcome = "none";

    // Pack disjoint sparse-colour cliques of size k*t.
    StageRecord& s4 = push_stage(rep, "clique-packing");
    const long long size_each = static_cast<long long>(k) * t;
    s4.params["size_each"] = size_each;
    const long long pool = static_cast<long long>(oc->u.count());
    if (size_each > pool) {
        s4.params["requested"] = 0;
        s4.sizes["achieved"] = 0;
        s4.outcome = "pool-too-small";
        rep.exhausted_stage = "clique-packing";
        return rep;
    }
    const int want = static_cast<int>(pool / size_each);
    s4.params["requested"] = want;
    PackingResult pk = clique_packing(c, oc->u, static_cast<int>(size_each),
                                      want, sparse);
    s4.sizes["achieved"] = pk.achieved();
    if (pk.achieved() == 0) {
        s4.outcome = "none";
        rep.exhausted_stage = "clique-packing";
        return rep;
    }
    s4.outcome = pk.complete() ? "complete" : "partial";

    StageRecord& s5 = push_stage(rep, "aux-digraph");
    s5.params["k"] = k;
    const Digraph aux = build_aux_digraph(c, pk.packing, k, sparse);
    s5.sizes["cliques"] = aux.order();
    s5.sizes["arcs"] = aux.arc_count();
    s5.sizes["max_in_degree"] = aux.max_in_degree();
    s5.outcome = "ok";

    // Cliques with enormous in-degree yield a hub whose common sparse-colour
    // neighbourhood covers the whole copy.
    StageRecord& s6 = push_stage(rep, "pigeonhole");
    unsigned long long threshold = static_cast<unsigned long long>(n);
    for (int i = 0; i < k; ++i)
        threshold = sat_mul(threshold, static_cast<unsigned long long>(size_each));
    s6.params["threshold"] = static_cast<long long>(
        std::min<unsigned long long>(threshold, LLONG_MAX));
    long long candidates = 0;
    for (int i = 0; i < aux.order(); ++i) {
        if (static_cast<unsigned long long>(aux.in_degree(i)) < threshold)
            continue;
        ++candidates;
        if (auto hit = pigeonhole_extract(c, pk.packing.cliques[i], k, n, sparse)) {
            s6.sizes["candidates"] = candidates;
            s6.outcome = "hit";
            std::vector<int> rest;
            for (int v : pk.packing.cliques[i])
                if (std::find(hit->hub.begin(), hit->hub.end(), v) == hit->hub.end())
                    rest.push_back(v);
            std::sort(rest.begin(), rest.end());
            rest.resize(t - k);
            assemble_clique_copy(rep, c, target, n, t, k, sparse, hit->hub,
                                 rest, hit->common, Bitset(c.order()));
            return rep;
        }
    }
    s6.sizes["candidates"] = candidates;
    s6.outcome = "no-hit";

    // Colour the auxiliary digraph; a colour class of t cliques has no arcs
    // inside, so the cross-clique greedy can assemble a majority-colour K_t.
    StageRecord& s7 = push_stage(rep, "digraph-colouring");
    const DigraphColouring dc = digraph_colouring(aux);
    s7.sizes["colours_used"] = dc.colours_used;
    std::vector<long long> class_size(static_cast<std::size_t>(dc.colours_used), 0);
    for (int v = 0; v < aux.order(); ++v) ++class_size[dc.colour[v]];
    int best_class = 0;
    for (int ccol = 1; ccol < dc.colours_used; ++ccol)
        if (class_size[ccol] > class_size[best_class]) best_class = ccol;
    const long long largest = dc.colours_used == 0 ? 0 : class_size[best_class];
    s7.sizes["largest_class"] = largest;
    if (largest < t) {
        s7.outcome = "class-too-small";
        rep.exhausted_stage = "digraph-colouring";
        return rep;
    }
    s7.outcome = "ok";

    StageRecord& s8 = push_stage(rep, "greedy-across");
    std::vector<std::vector<int>> chosen;
    for (int v = 0; v < aux.order() && static_cast<int>(chosen.size()) < t; ++v)
        if (dc.colour[v] == best_class) chosen.push_back(pk.packing.cliques[v]);
    s8.params["t"] = t;
    const AcrossResult across = greedy_blue_clique_across(c, chosen, k, sparse);
    if (!across.embedding) {
        s8.sizes["failed_at"] = across.failed_at;
        s8.outcome = "stuck";
        rep.exhausted_stage = "greedy-across";
        return rep;
    }
    s8.outcome = "ok";
    assemble_clique_from_kt(rep, c, target, n, t, k, oc->major, oc->major_hub,
                            across.embedding->map, oc->u);
    return rep;
}

} // namespace ramseykit
