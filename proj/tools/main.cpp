#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ramseykit/arrowing.hpp"
#include "ramseykit/codec.hpp"
#include "ramseykit/connectivity.hpp"
#include "ramseykit/construction.hpp"
#include "ramseykit/errors.hpp"
#include "ramseykit/gen.hpp"
#include "ramseykit/graph.hpp"
#include "ramseykit/proof_engine.hpp"

using json = nlohmann::json;
using namespace ramseykit;

namespace {

int resolve_threads(int flag) {
    if (flag > 0) return flag;
    if (const char* env = std::getenv("RAMSEYKIT_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

std::pair<long long, long long> parse_ratio(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos || slash == 0 || slash + 1 == s.size())
        throw ParseError("ratio must look like p/q, got: " + s);
    try {
        const long long p = std::stoll(s.substr(0, slash));
        const long long q = std::stoll(s.substr(slash + 1));
        return {p, q};
    } catch (const std::exception&) {
        throw ParseError("ratio must be two integers p/q, got: " + s);
    }
}

std::string read_first_line(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParameterError("cannot open file: " + path);
    std::string line;
    std::getline(in, line);
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
        line.pop_back();
    if (line.empty()) throw ParseError("empty input file: " + path);
    return line;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw ParameterError("cannot open file for writing: " + path);
    out << text << "\n";
}

json stages_to_json(const std::vector<StageRecord>& stages) {
    json arr = json::array();
    for (const auto& s : stages) {
        json rec;
        rec["stage"] = s.stage;
        rec["outcome"] = s.outcome;
        rec["params"] = json::object();
        for (const auto& [key, val] : s.params) rec["params"][key] = val;
        rec["sizes"] = json::object();
        for (const auto& [key, val] : s.sizes) rec["sizes"][key] = val;
        arr.push_back(rec);
    }
    return arr;
}

void print_stages(const std::vector<StageRecord>& stages) {
    std::cout << "stages:\n";
    for (const auto& s : stages) {
        std::cout << "  " << s.stage << ": " << s.outcome;
        for (const auto& [key, val] : s.params) std::cout << " " << key << "=" << val;
        for (const auto& [key, val] : s.sizes) std::cout << " " << key << "=" << val;
        std::cout << "\n";
    }
}

std::string join_ints(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(v[i]);
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ramseykit: k-connected graph families with small Ramsey "
                 "numbers, and the search machinery that certifies them"};
    app.require_subcommand(1);

    bool as_json = false;
    int threads_flag = 0;
    app.add_flag("--json", as_json, "machine-readable JSON on stdout");
    app.add_option("--threads", threads_flag,
                   "worker count (default: RAMSEYKIT_THREADS or machine parallelism)");

    // construct
    auto* c_cmd = app.add_subcommand("construct", "build a family member G_n");
    int c_n = 0, c_k = 0;
    long long c_f = 0;
    std::string c_case = "auto", c_proxy = "exp", c_out;
    c_cmd->fallthrough();
    c_cmd->add_option("--n", c_n, "number of vertices")->required();
    c_cmd->add_option("--k", c_k, "connectivity target")->required();
    c_cmd->add_option("--f", c_f, "Ramsey budget f(n) >= n")->required();
    c_cmd->add_option("--case", c_case, "auto | 1 (biclique) | 2 (clique)")
        ->check(CLI::IsMember({"auto", "1", "2"}));
    c_cmd->add_option("--proxy", c_proxy, "t-selection rule: exp | exact")
        ->check(CLI::IsMember({"exp", "exact"}));
    c_cmd->add_option("--out", c_out, "also write the graph6 line to this file");

    // kappa
    auto* k_cmd = app.add_subcommand("kappa", "exact vertex connectivity with certificate");
    std::string k_in;
    int k_assert = -1;
    k_cmd->fallthrough();
    k_cmd->add_option("--in", k_in, "graph6 file")->required();
    k_cmd->add_option("--assert-k", k_assert, "exit 1 unless kappa equals this");

    // arrows
    auto* a_cmd = app.add_subcommand("arrows", "exhaustive arrowing decision K_N -> (G, H)");
    int a_n = 0;
    std::string a_p1, a_p2;
    a_cmd->fallthrough();
    a_cmd->add_option("--n", a_n, "complete-graph order N")->required();
    a_cmd->add_option("--pattern", a_p1, "graph6 of the red pattern")->required();
    a_cmd->add_option("--pattern2", a_p2, "graph6 of the blue pattern (default: same)");

    // ramsey
    auto* r_cmd = app.add_subcommand("ramsey", "smallest N with K_N -> (G, G)");
    std::string r_p;
    int r_cap = kArrowsCap;
    r_cmd->fallthrough();
    r_cmd->add_option("--pattern", r_p, "graph6 of the pattern")->required();
    r_cmd->add_option("--cap", r_cap, "largest N to try");

    // strategy
    auto* s_cmd = app.add_subcommand(
        "strategy", "run a monochromatic-copy search pipeline on a colouring");
    int s_case = 0, s_n = 0, s_t = 0, s_k = 0;
    std::string s_col, s_eps, s_trace;
    s_cmd->fallthrough();
    s_cmd->add_option("--case", s_case, "1 (biclique pipeline) | 2 (clique pipeline)")
        ->required()
        ->check(CLI::IsMember({"1", "2"}));
    s_cmd->add_option("--colouring", s_col, "RB colouring file")->required();
    s_cmd->add_option("--n", s_n, "target order n")->required();
    s_cmd->add_option("--t", s_t, "clique/biclique side t")->required();
    s_cmd->add_option("--k", s_k, "hub size k")->required();
    s_cmd->add_option("--epsilon", s_eps, "descent fraction p/q (default 1/40 or 1/8)");
    s_cmd->add_option("--trace", s_trace, "write the stage records as JSON to this file");

    // color-digraph
    auto* d_cmd = app.add_subcommand("color-digraph",
                                     "proper-colour a digraph with <= 2D+1 colours");
    std::string d_in;
    d_cmd->fallthrough();
    d_cmd->add_option("--in", d_in, "digraph6 file")->required();

    // gen-coloring
    auto* g_cmd = app.add_subcommand("gen-coloring", "seeded colouring of K_N");
    int g_n = 0;
    std::string g_dist = "uniform", g_p = "1/2", g_out;
    std::uint64_t g_seed = 0;
    g_cmd->fallthrough();
    g_cmd->add_option("--n", g_n, "number of vertices")->required();
    g_cmd->add_option("--dist", g_dist, "uniform | all-red | all-blue | pentagon-like");
    g_cmd->add_option("--p", g_p, "red probability p/q for uniform");
    g_cmd->add_option("--seed", g_seed, "64-bit seed");
    g_cmd->add_option("--out", g_out, "also write the RB line to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    const int threads = resolve_threads(threads_flag);
    json out;
    out["schema"] = 1;

    try {
        if (c_cmd->parsed()) {
            const BoundProxy proxy =
                c_proxy == "exp" ? BoundProxy::exp_lower() : BoundProxy::exact();
            std::optional<ConstructionCase> force;
            if (c_case == "1") force = ConstructionCase::Biclique;
            if (c_case == "2") force = ConstructionCase::Clique;
            auto [g, p] = build_family_member(c_n, c_k, c_f, proxy, force);
            const std::string g6 = serialize_graph6(g);
            if (!c_out.empty()) write_file(c_out, g6);
            if (as_json) {
                out["command"] = "construct";
                out["n"] = p.n;
                out["k"] = p.k;
                out["f"] = c_f;
                out["t"] = p.t;
                out["case"] = p.kind == ConstructionCase::Biclique ? 1 : 2;
                out["edges"] = g.edge_count();
                out["graph6"] = g6;
                std::cout << out.dump() << "\n";
            } else {
                std::cout << "n: " << p.n << "\nk: " << p.k << "\nt: " << p.t
                          << "\ncase: " << (p.kind == ConstructionCase::Biclique ? 1 : 2)
                          << "\nedges: " << g.edge_count() << "\ngraph6: " << g6 << "\n";
            }
        } else if (k_cmd->parsed()) {
            const Graph g = parse_graph6(read_first_line(k_in));
            const ConnectivityCertificate cert = vertex_connectivity(g);
            if (as_json) {
                out["command"] = "kappa";
                out["order"] = g.order();
                out["kappa"] = cert.kappa;
                out["cut"] = cert.cut ? json(*cert.cut) : json(nullptr);
                out["witness_pair"] =
                    cert.witness_pair
                        ? json::array({cert.witness_pair->first, cert.witness_pair->second})
                        : json(nullptr);
                std::cout << out.dump() << "\n";
            } else {
                std::cout << "order: " << g.order() << "\nkappa: " << cert.kappa << "\n";
                if (cert.cut)
                    std::cout << "cut: " << join_ints(*cert.cut) << "\n";
                else
                    std::cout << "cut: none (complete graph)\n";
                if (cert.witness_pair)
                    std::cout << "witness-pair: " << cert.witness_pair->first << " "
                              << cert.witness_pair->second << "\n";
                else
                    std::cout << "witness-pair: none\n";
            }
            if (k_assert >= 0 && cert.kappa != k_assert)
                throw AssertionError("kappa is " + std::to_string(cert.kappa) +
                                     ", expected " + std::to_string(k_assert));
        } else if (a_cmd->parsed()) {
            const Graph p1 = parse_graph6(a_p1);
            const Graph p2 = a_p2.empty() ? p1 : parse_graph6(a_p2);
            const ArrowingResult res = arrows(a_n, p1, p2, threads);
            if (as_json) {
                out["command"] = "arrows";
                out["n"] = a_n;
                out["holds"] = res.holds;
                out["witness"] =
                    res.witness ? json(encode_colouring(*res.witness)) : json(nullptr);
                std::cout << out.dump() << "\n";
            } else {
                std::cout << "arrows: " << (res.holds ? "true" : "false") << "\n";
                if (res.witness)
                    std::cout << "witness: " << encode_colouring(*res.witness) << "\n";
            }
        } else if (r_cmd->parsed()) {
            const Graph p = parse_graph6(r_p);
            const RamseyValue rv = ramsey_number(p, r_cap, threads);
            if (as_json) {
                out["command"] = "ramsey";
                out["cap"] = rv.cap;
                out["value"] = rv.value ? json(*rv.value) : json(nullptr);
                out["lower_bound"] = rv.lower_bound;
                out["witness"] =
                    rv.witness ? json(encode_colouring(*rv.witness)) : json(nullptr);
                std::cout << out.dump() << "\n";
            } else {
                if (rv.value)
                    std::cout << "value: " << *rv.value << "\n";
                else
                    std::cout << "value: over cap " << rv.cap << "\nlower-bound: "
                              << rv.lower_bound << "\n";
                if (rv.witness)
                    std::cout << "witness: " << encode_colouring(*rv.witness) << "\n";
            }
        } else if (s_cmd->parsed()) {
            const TwoColouring col = decode_colouring(read_first_line(s_col));
            Ratio eps = s_case == 1 ? Ratio{1, 40} : Ratio{1, 8};
            if (!s_eps.empty()) {
                const auto [p, q] = parse_ratio(s_eps);
                eps = Ratio{p, q};
            }
            const StrategyReport rep = s_case == 1
                                           ? case1_strategy(col, s_n, s_t, s_k, eps)
                                           : case2_strategy(col, s_n, s_t, s_k, eps);
            if (!s_trace.empty()) write_file(s_trace, stages_to_json(rep.stages).dump());
            if (as_json) {
                out["command"] = "strategy";
                out["case"] = s_case;
                out["n"] = s_n;
                out["t"] = s_t;
                out["k"] = s_k;
                out["epsilon"] = std::to_string(eps.num) + "/" + std::to_string(eps.den);
                out["found"] = rep.found;
                out["exhausted_stage"] =
                    rep.found ? json(nullptr) : json(rep.exhausted_stage);
                if (rep.found) {
                    json emb;
                    emb["colour"] = colour_name(rep.embedding->colour);
                    emb["map"] = rep.embedding->map;
                    out["embedding"] = emb;
                } else {
                    out["embedding"] = nullptr;
                }
                out["stages"] = stages_to_json(rep.stages);
                std::cout << out.dump() << "\n";
            } else {
                std::cout << "result: " << (rep.found ? "FOUND" : "EXHAUSTED") << "\n";
                if (rep.found) {
                    std::cout << "colour: " << colour_name(rep.embedding->colour) << "\n"
                              << "map: " << join_ints(rep.embedding->map) << "\n";
                } else {
                    std::cout << "stage: " << rep.exhausted_stage << "\n";
                }
                print_stages(rep.stages);
            }
        } else if (d_cmd->parsed()) {
            const Digraph d = parse_digraph6(read_first_line(d_in));
            const DigraphColouring dc = digraph_colouring(d);
            if (as_json) {
                out["command"] = "color-digraph";
                out["order"] = d.order();
                out["max_in_degree"] = d.max_in_degree();
                out["colours_used"] = dc.colours_used;
                out["colouring"] = dc.colour;
                out["elimination_order"] = dc.order;
                std::cout << out.dump() << "\n";
            } else {
                std::cout << "order: " << d.order() << "\nmax-in-degree: "
                          << d.max_in_degree() << "\ncolours-used: " << dc.colours_used
                          << "\ncolouring: " << join_ints(dc.colour)
                          << "\nelimination-order: " << join_ints(dc.order) << "\n";
            }
        } else if (g_cmd->parsed()) {
            GenSpec spec;
            spec.dist = parse_distribution(g_dist);
            spec.seed = g_seed;
            const auto [p, q] = parse_ratio(g_p);
            require(p >= 0 && q >= 1 && p <= q,
                    "red probability must satisfy 0 <= p/q <= 1");
            spec.p = static_cast<std::uint64_t>(p);
            spec.q = static_cast<std::uint64_t>(q);
            const TwoColouring col = gen_colouring(g_n, spec);
            const std::string rb = encode_colouring(col);
            if (!g_out.empty()) write_file(g_out, rb);
            if (as_json) {
                out["command"] = "gen-coloring";
                out["n"] = g_n;
                out["dist"] = distribution_name(spec.dist);
                out["p"] = std::to_string(p) + "/" + std::to_string(q);
                out["seed"] = g_seed;
                out["colouring"] = rb;
                std::cout << out.dump() << "\n";
            } else {
                std::cout << rb << "\n";
            }
        }
    } catch (const CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return 3;
    } catch (const ParameterError& e) { // includes ParseError
        std::cerr << "parameter error: " << e.what() << "\n";
        return 2;
    } catch (const AssertionError& e) {
        std::cerr << "assertion failed: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
