#include <doctest.h>

#include "ramseykit/arrowing.hpp"
#include "ramseykit/codec.hpp"

using namespace ramseykit;

namespace {

// A witness is good iff neither colour class contains its pattern.
bool witness_ok(const TwoColouring& c, const Graph& p1, const Graph& p2) {
    if (p1.order() <= c.order() && find_mono_copy(c, p1, Colour::Red))
        return false;
    if (p2.order() <= c.order() && find_mono_copy(c, p2, Colour::Blue))
        return false;
    return true;
}

} // namespace

TEST_SUITE("ramsey-exact") {

TEST_CASE("find_mono_copy canonical examples") {
    TwoColouring allred = TwoColouring::all_red(5);
    auto e = find_mono_copy(allred, Graph::complete(3), Colour::Red);
    REQUIRE(e.has_value());
    CHECK(e->map == std::vector<int>{0, 1, 2});
    CHECK(validate_embedding(*e, allred));
    CHECK_FALSE(find_mono_copy(allred, Graph::complete(2), Colour::Blue));

    TwoColouring p = TwoColouring::pentagon();
    CHECK_FALSE(find_mono_copy(p, Graph::complete(3), Colour::Red));
    CHECK_FALSE(find_mono_copy(p, Graph::complete(3), Colour::Blue));
    // the red class is exactly a 5-cycle
    auto c5 = find_mono_copy(p, Graph::cycle(5), Colour::Red);
    REQUIRE(c5.has_value());
    CHECK(validate_embedding(*c5, p));

    CHECK_THROWS_AS(find_mono_copy(p, Graph::complete(6), Colour::Red),
                    ParameterError);
}

TEST_CASE("find_mono_copy handles disconnected and edgeless patterns") {
    TwoColouring c = TwoColouring::all_blue(4);
    c.paint(0, 1, Colour::Red);
    // single red edge plus an isolated vertex
    Graph pat(3);
    pat.add_edge(0, 1);
    auto e = find_mono_copy(c, pat, Colour::Red);
    REQUIRE(e.has_value());
    CHECK(validate_embedding(*e, c));
    // K_1 embeds anywhere
    CHECK(find_mono_copy(c, Graph::empty(1), Colour::Red));
}

TEST_CASE("find_subgraph on plain graphs") {
    Graph host = Graph::cycle(6);
    CHECK(find_subgraph(host, Graph::path(4)));
    CHECK_FALSE(find_subgraph(host, Graph::complete(3)));
    CHECK_FALSE(find_subgraph(Graph::path(3), Graph::path(4)));
}

TEST_CASE("arrows small exact decisions") {
    Graph k3 = Graph::complete(3);
    CHECK(arrows(6, k3, k3).holds);
    CHECK(arrows(1, Graph::empty(1), Graph::empty(1)).holds);

    ArrowingResult r5 = arrows(5, k3, k3);
    CHECK_FALSE(r5.holds);
    REQUIRE(r5.witness.has_value());
    CHECK(witness_ok(*r5.witness, k3, k3));
    // first good colouring in DFS order: a red 5-cycle
    CHECK(encode_colouring(*r5.witness) == "RB 5 C4C");
    Graph red = red_subgraph(*r5.witness);
    CHECK(red.edge_count() == 5);
    for (int v = 0; v < 5; ++v) CHECK(red.degree(v) == 2);
}

TEST_CASE("arrows off-diagonal") {
    Graph k3 = Graph::complete(3);
    Graph p3 = Graph::path(3);
    // K_N -> (P_3, K_3) already at N = 5 but not at 4: the blue class of a
    // P_3-free red graph (a matching) is nearly complete.
    ArrowingResult a = arrows(5, p3, k3);
    CHECK(a.holds);
    ArrowingResult b = arrows(4, p3, k3);
    CHECK_FALSE(b.holds);
    REQUIRE(b.witness.has_value());
    CHECK(witness_ok(*b.witness, p3, k3));
}

TEST_CASE("arrows capacity and parameter errors") {
    Graph k3 = Graph::complete(3);
    CHECK_THROWS_AS(arrows(9, k3, k3), CapacityError);
    CHECK_THROWS_AS(arrows(-1, k3, k3), ParameterError);
}

TEST_CASE("frozen small Ramsey numbers") {
    CHECK(ramsey_number(Graph::complete(2), 8).value == 2);
    CHECK(ramsey_number(Graph::complete(3), 8).value == 6);
    CHECK(ramsey_number(Graph::path(4), 8).value == 5);
    CHECK(ramsey_number(Graph::star(3), 8).value == 6);
    CHECK(ramsey_number(Graph::complete_bipartite(2, 2), 8).value == 6);
}

TEST_CASE("ramsey_number witness sits one level below the value") {
    RamseyValue r = ramsey_number(Graph::complete(3), 8);
    REQUIRE(r.value == 6);
    CHECK(r.lower_bound == 6);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->order() == 5);
    CHECK(encode_colouring(*r.witness) == "RB 5 C4C");
}

TEST_CASE("ramsey_number over cap reports a witness-backed lower bound") {
    Graph k4 = Graph::complete(4);
    RamseyValue r = ramsey_number(k4, 8);
    CHECK(r.over_cap());
    CHECK_FALSE(r.value.has_value());
    CHECK(r.lower_bound == 9);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->order() == 8);
    CHECK(witness_ok(*r.witness, k4, k4));
    CHECK_THROWS_AS(ramsey_number(k4, 20), CapacityError);
    CHECK_THROWS_AS(ramsey_number(k4, 0), ParameterError);
}

TEST_CASE("parallel search returns the sequential witness") {
    Graph k4 = Graph::complete(4);
    ArrowingResult seq = arrows(7, k4, k4, 1);
    ArrowingResult par = arrows(7, k4, k4, 4);
    CHECK_FALSE(seq.holds);
    CHECK_FALSE(par.holds);
    REQUIRE(seq.witness.has_value());
    REQUIRE(par.witness.has_value());
    CHECK(*seq.witness == *par.witness);
    CHECK(witness_ok(*par.witness, k4, k4));

    Graph k3 = Graph::complete(3);
    CHECK(arrows(7, k3, k3, 4).holds == arrows(7, k3, k3, 1).holds);
}

} // TEST_SUITE
