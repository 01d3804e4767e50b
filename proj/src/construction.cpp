#include "ramseykit/construction.hpp"

#include <algorithm>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "ramseykit/arrowing.hpp"
#include "ramseykit/errors.hpp"

namespace ramseykit {
namespace {

using boost::multiprecision::cpp_int;

void check_params(const ConstructionParams& p, const char* who) {
    const std::string head = std::string(who) + ": ";
    require(p.k >= 2, head + "requires k >= 2 (got k = " + std::to_string(p.k) + ")");
    require(p.k + 1 <= p.t, head + "requires k + 1 <= t (got k = " +
                                std::to_string(p.k) + ", t = " + std::to_string(p.t) + ")");
    if (p.kind == ConstructionCase::Biclique)
        require(p.n >= 2 * p.t, head + "requires n >= 2t (got n = " +
                                    std::to_string(p.n) + ", t = " + std::to_string(p.t) + ")");
    else
        require(p.n >= p.t, head + "requires n >= t (got n = " +
                                std::to_string(p.n) + ", t = " + std::to_string(p.t) + ")");
    require(static_cast<int>(p.hub.size()) == p.k, head + "hub must list exactly k vertices");
    for (int i = 0; i < p.k; ++i)
        require(p.hub[i] == i, head + "hub is canonically {0..k-1}");
}

} // namespace

ConstructionParams ConstructionParams::make(int n, int t, int k,
                                            ConstructionCase kind) {
    ConstructionParams p;
    p.n = n;
    p.t = t;
    p.k = k;
    p.kind = kind;
    for (int v = 0; v < k; ++v) p.hub.push_back(v);
    return p;
}

Graph construct_case1(const ConstructionParams& p) {
    require(p.kind == ConstructionCase::Biclique,
            "construct_case1: params built for the clique case");
    check_params(p, "construct_case1");
    Graph g(p.n);
    for (int a = 0; a < p.t; ++a)
        for (int b = p.t; b < 2 * p.t; ++b) g.add_edge(a, b);
    for (int h = 0; h < p.k; ++h)
        for (int v = 2 * p.t; v < p.n; ++v) g.add_edge(h, v);
    ensure(g.edge_count() == static_cast<long long>(p.t) * p.t +
                                 static_cast<long long>(p.k) * (p.n - 2 * p.t),
           "construct_case1: edge count formula violated");
    return g;
}

Graph construct_case2(const ConstructionParams& p) {
    require(p.kind == ConstructionCase::Clique,
            "construct_case2: params built for the biclique case");
    check_params(p, "construct_case2");
    Graph g(p.n);
    for (int a = 0; a < p.t; ++a)
        for (int b = a + 1; b < p.t; ++b) g.add_edge(a, b);
    for (int h = 0; h < p.k; ++h)
        for (int v = p.t; v < p.n; ++v) g.add_edge(h, v);
    ensure(g.edge_count() == static_cast<long long>(p.t) * (p.t - 1) / 2 +
                                 static_cast<long long>(p.k) * (p.n - p.t),
           "construct_case2: edge count formula violated");
    return g;
}

int select_t(long long fn_value, ConstructionCase pattern, BoundProxy proxy) {
    require(fn_value >= 1, "select_t: fn_value must be >= 1");
    if (proxy.kind == BoundProxy::Kind::ExpLower) {
        // smallest t with 2^{t/2} > f, i.e. 2^t > f^2 (exact in 128 bits)
        const auto f = static_cast<unsigned __int128>(fn_value);
        const unsigned __int128 f2 = f * f;
        int t = 1;
        while (t < 127 && (static_cast<unsigned __int128>(1) << t) <= f2) ++t;
        return t;
    }
    require(proxy.cap >= 1 && proxy.cap <= kArrowsCap,
            "select_t: EXACT proxy cap must lie in [1, " +
                std::to_string(kArrowsCap) + "]");
    for (int t = 1;; ++t) {
        Graph pat = (pattern == ConstructionCase::Clique)
                        ? Graph::complete(t)
                        : Graph::complete_bipartite(t, t);
        const int cap = static_cast<int>(
            std::min<long long>(fn_value, proxy.cap));
        RamseyValue rv = ramsey_number(pat, cap);
        if (!rv.over_cap()) continue; // r <= cap <= fn_value: t too small
        // over cap: r >= cap + 1, proven by the witness at cap
        if (cap == fn_value) return t; // r > fn_value decided
        throw CapacityError(
            "select_t: deciding r > " + std::to_string(fn_value) + " at t = " +
            std::to_string(t) + " exceeds the exhaustive search cap; partial "
            "bracket: r >= " + std::to_string(rv.lower_bound));
    }
}

std::pair<Graph, ConstructionParams> build_family_member(
    int n, int k, long long fn_value, BoundProxy proxy,
    std::optional<ConstructionCase> force) {
    require(n >= 1, "build_family_member: n must be >= 1");
    require(k >= 2, "build_family_member: k must be >= 2");
    require(n <= fn_value, "build_family_member: requires n <= fn_value (got n = " +
                               std::to_string(n) + ", fn_value = " +
                               std::to_string(fn_value) + ")");

    bool case1;
    if (force) {
        case1 = (*force == ConstructionCase::Biclique);
    } else {
        // Case 1 iff f(n) <= 2^{n/8}, compared exactly as fn^8 <= 2^n.
        const cpp_int f8 = boost::multiprecision::pow(cpp_int(fn_value), 8);
        case1 = f8 <= (cpp_int(1) << n);
    }
    const ConstructionCase kind =
        case1 ? ConstructionCase::Biclique : ConstructionCase::Clique;

    int t = select_t(fn_value, kind, proxy);
    if (t < k + 1) t = k + 1; // r is monotone in t, so the bound survives

    if (case1 && n < 2 * t)
        throw CapacityError("build_family_member: case 1 needs n >= 2t (got n = " +
                            std::to_string(n) + ", t = " + std::to_string(t) + ")");
    if (!case1 && n < t)
        throw CapacityError("build_family_member: case 2 needs n >= t (got n = " +
                            std::to_string(n) + ", t = " + std::to_string(t) + ")");

    ConstructionParams p = ConstructionParams::make(n, t, k, kind);
    Graph g = case1 ? construct_case1(p) : construct_case2(p);
    return {std::move(g), std::move(p)};
}

} // namespace ramseykit
