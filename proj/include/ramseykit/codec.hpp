#pragma once

#include <string>

#include "ramseykit/graph.hpp"

namespace ramseykit {

// graph6: 6-bit packed upper triangle, bytes offset by 63. Pair order is
// the format's column order (0,1),(0,2),(1,2),(0,3),... Orders up to 258047
// are supported (one- and four-byte size prefixes).
Graph parse_graph6(const std::string& text);
std::string serialize_graph6(const Graph& g);

// digraph6 ('&' prefix): the full n*n adjacency matrix in row-major order,
// 6-bit packed like graph6.
Digraph parse_digraph6(const std::string& text);
std::string serialize_digraph6(const Digraph& d);

// Colouring codec: "RB <N> <hex>", where the hex digits pack the colour
// bits of all pairs in lexicographic order (0,1),(0,2),...,(0,N-1),(1,2),...
// MSB first, bit 1 = RED, zero padding to a whole number of digits.
std::string encode_colouring(const TwoColouring& c);
TwoColouring decode_colouring(const std::string& text);

// rank of pair {i,j}, i<j, in the codec's lexicographic order
inline long long pair_rank(int n, int i, int j) {
    return static_cast<long long>(i) * n - static_cast<long long>(i) * (i + 1) / 2 +
           (j - i - 1);
}

} // namespace ramseykit
