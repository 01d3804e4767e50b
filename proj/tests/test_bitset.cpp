#include <doctest.h>

#include "ramseykit/bitset.hpp"

using ramseykit::Bitset;

TEST_SUITE("bitset") {

TEST_CASE("set/test/reset across word boundaries") {
    Bitset b(130);
    CHECK(b.none());
    b.set(0);
    b.set(63);
    b.set(64);
    b.set(129);
    CHECK(b.count() == 4);
    CHECK(b.test(63));
    CHECK(b.test(64));
    CHECK_FALSE(b.test(65));
    b.reset(64);
    CHECK(b.count() == 3);
    CHECK(b.any());
}

TEST_CASE("find_first and next iterate ascending") {
    Bitset b(200);
    for (int i : {5, 64, 65, 199}) b.set(i);
    std::vector<int> seen;
    for (std::size_t v = b.find_first(); v < b.size(); v = b.next(v + 1))
        seen.push_back(static_cast<int>(v));
    CHECK(seen == std::vector<int>{5, 64, 65, 199});
    Bitset e(70);
    CHECK(e.find_first() == e.size());
}

TEST_CASE("set_all trims tail bits") {
    Bitset b(70);
    b.set_all();
    CHECK(b.count() == 70);
    CHECK(b.test(69));
}

TEST_CASE("word ops: and, or, subtract, count_and, intersects") {
    Bitset a(100), b(100);
    for (int i = 0; i < 100; i += 2) a.set(i);
    for (int i = 0; i < 100; i += 3) b.set(i);
    Bitset both = a & b;
    CHECK(both.count() == 17); // multiples of 6 in [0,100)
    CHECK(a.count_and(b) == 17);
    CHECK(a.intersects(b));
    Bitset u = a | b;
    CHECK(u.count() == 50 + 34 - 17);
    Bitset c = a;
    c.subtract(b);
    CHECK(c.count() == 50 - 17);
    CHECK_FALSE(c.intersects(b));
}

TEST_CASE("for_each and to_vector agree") {
    Bitset b(80);
    for (int i : {0, 7, 63, 64, 79}) b.set(i);
    std::vector<int> v;
    b.for_each([&](std::size_t i) { v.push_back(static_cast<int>(i)); });
    CHECK(v == b.to_vector());
    CHECK(v == std::vector<int>{0, 7, 63, 64, 79});
}

} // TEST_SUITE
