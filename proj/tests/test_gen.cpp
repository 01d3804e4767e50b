#include <doctest.h>

#include "ramseykit/codec.hpp"
#include "ramseykit/gen.hpp"

using namespace ramseykit;

// Recorded fixture for this implementation's counter-based generator
// (splitmix64 finalizer over seed + golden-ratio * (rank+1)).  Any change to
// the mixer or the rank convention must show up here.
static const char* kUniformN10Seed42 = "RB 10 7AB1E4C01D60";
static const char* kUniformThirdN8Seed7 = "RB 8 45A0442";

TEST_SUITE("gen") {

TEST_CASE("fixed distributions") {
    CHECK(gen_colouring(4, {Distribution::AllRed, 1, 2, 7}) ==
          TwoColouring::all_red(4));
    CHECK(gen_colouring(6, {Distribution::AllBlue, 1, 2, 7}) ==
          TwoColouring::all_blue(6));
    CHECK(gen_colouring(5, {Distribution::PentagonLike, 1, 2, 999}) ==
          TwoColouring::pentagon());
    CHECK_THROWS_AS(gen_colouring(6, {Distribution::PentagonLike, 1, 2, 0}),
                    ParameterError);
}

TEST_CASE("uniform is deterministic in the seed") {
    GenSpec s{Distribution::Uniform, 1, 2, 42};
    TwoColouring a = gen_colouring(10, s);
    TwoColouring b = gen_colouring(10, s);
    CHECK(a == b);
    s.seed = 43;
    CHECK_FALSE(gen_colouring(10, s) == a);
}

TEST_CASE("uniform recorded fixtures") {
    GenSpec s{Distribution::Uniform, 1, 2, 42};
    CHECK(encode_colouring(gen_colouring(10, s)) == kUniformN10Seed42);
    GenSpec t{Distribution::Uniform, 1, 3, 7};
    CHECK(encode_colouring(gen_colouring(8, t)) == kUniformThirdN8Seed7);
}

TEST_CASE("degenerate probabilities") {
    GenSpec zero{Distribution::Uniform, 0, 1, 5};
    CHECK(gen_colouring(8, zero) == TwoColouring::all_blue(8));
    GenSpec one{Distribution::Uniform, 1, 1, 5};
    CHECK(gen_colouring(8, one) == TwoColouring::all_red(8));
    CHECK_THROWS_AS(gen_colouring(8, {Distribution::Uniform, 3, 2, 5}),
                    ParameterError);
    CHECK_THROWS_AS(gen_colouring(8, {Distribution::Uniform, 1, 0, 5}),
                    ParameterError);
}

TEST_CASE("uniform half stays near half") {
    GenSpec s{Distribution::Uniform, 1, 2, 2024};
    TwoColouring c = gen_colouring(64, s);
    long long red = c.count(Colour::Red);
    long long total = 64 * 63 / 2; // 2016
    CHECK(red > total / 3);
    CHECK(red < 2 * total / 3);
}

TEST_CASE("distribution names parse both ways") {
    for (auto d : {Distribution::Uniform, Distribution::AllRed,
                   Distribution::AllBlue, Distribution::PentagonLike})
        CHECK(parse_distribution(distribution_name(d)) == d);
    CHECK_THROWS_AS(parse_distribution("striped"), ParameterError);
}

} // TEST_SUITE
