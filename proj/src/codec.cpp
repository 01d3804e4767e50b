#include "ramseykit/codec.hpp"

#include <cctype>
#include <sstream>

namespace ramseykit {

namespace {

// Pulls one 6-bit group per input byte; bytes must sit in [63, 126].
class SixBitReader {
public:
    SixBitReader(const std::string& text, std::size_t pos) : text_(text), pos_(pos) {}

    int next() {
        if (pos_ >= text_.size())
            throw ParseError("graph6: input truncated at byte offset " +
                             std::to_string(pos_));
        unsigned char ch = static_cast<unsigned char>(text_[pos_]);
        if (ch < 63 || ch > 126)
            throw ParseError("graph6: character out of range at byte offset " +
                             std::to_string(pos_));
        ++pos_;
        return ch - 63;
    }

    std::size_t pos() const { return pos_; }

private:
    const std::string& text_;
    std::size_t pos_;
};

long long read_order(SixBitReader& r) {
    int first = r.next();
    if (first != 63) return first;
    // 126 -> three further groups, 126 126 -> six further groups
    int second = r.next();
    if (second != 63) {
        long long n = second;
        for (int i = 0; i < 2; ++i) n = (n << 6) | r.next();
        return n;
    }
    long long n = 0;
    for (int i = 0; i < 6; ++i) n = (n << 6) | r.next();
    return n;
}

void append_order(std::string& out, long long n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
}

} // namespace

Graph parse_graph6(const std::string& text) {
    SixBitReader r(text, 0);
    long long n = read_order(r);
    if (n < 0 || n > 258047)
        throw ParseError("graph6: order out of supported range");
    Graph g(static_cast<int>(n));
    long long nbits = n * (n - 1) / 2;
    int group = 0, avail = 0;
    // column order: bit for {i,j} at position rank(j)+i
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (avail == 0) {
                group = r.next();
                avail = 6;
            }
            if ((group >> (avail - 1)) & 1) g.add_edge(i, j);
            --avail;
        }
    }
    // the tail has to be exactly the zero padding
    if (avail > 0 && (group & ((1 << avail) - 1)) != 0)
        throw ParseError("graph6: nonzero padding bits at byte offset " +
                         std::to_string(r.pos() - 1));
    if (r.pos() != text.size())
        throw ParseError("graph6: trailing data at byte offset " +
                         std::to_string(r.pos()) + " (expected " +
                         std::to_string((nbits + 5) / 6) + " body bytes)");
    return g;
}

std::string serialize_graph6(const Graph& g) {
    std::string out;
    append_order(out, g.order());
    int group = 0, used = 0;
    for (int j = 1; j < g.order(); ++j) {
        for (int i = 0; i < j; ++i) {
            group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++used == 6) {
                out.push_back(static_cast<char>(group + 63));
                group = used = 0;
            }
        }
    }
    if (used > 0) out.push_back(static_cast<char>((group << (6 - used)) + 63));
    return out;
}

Digraph parse_digraph6(const std::string& text) {
    if (text.empty() || text[0] != '&')
        throw ParseError("digraph6: missing '&' header at byte offset 0");
    SixBitReader r(text, 1);
    long long n = read_order(r);
    if (n < 0 || n > 258047)
        throw ParseError("digraph6: order out of supported range");
    Digraph d(static_cast<int>(n));
    int group = 0, avail = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (avail == 0) {
                group = r.next();
                avail = 6;
            }
            bool bit = (group >> (avail - 1)) & 1;
            --avail;
            if (bit) {
                if (i == j)
                    throw ParseError("digraph6: self-arc encoded for vertex " +
                                     std::to_string(i));
                d.add_arc(i, j);
            }
        }
    }
    if (avail > 0 && (group & ((1 << avail) - 1)) != 0)
        throw ParseError("digraph6: nonzero padding bits");
    if (r.pos() != text.size())
        throw ParseError("digraph6: trailing data at byte offset " +
                         std::to_string(r.pos()));
    return d;
}

std::string serialize_digraph6(const Digraph& d) {
    std::string out = "&";
    append_order(out, d.order());
    int group = 0, used = 0;
    for (int i = 0; i < d.order(); ++i) {
        for (int j = 0; j < d.order(); ++j) {
            group = (group << 1) | (d.has_arc(i, j) ? 1 : 0);
            if (++used == 6) {
                out.push_back(static_cast<char>(group + 63));
                group = used = 0;
            }
        }
    }
    if (used > 0) out.push_back(static_cast<char>((group << (6 - used)) + 63));
    return out;
}

std::string encode_colouring(const TwoColouring& c) {
    const int n = c.order();
    std::string out = "RB " + std::to_string(n);
    long long npairs = static_cast<long long>(n) * (n - 1) / 2;
    if (npairs == 0) return out;
    out += ' ';
    int nibble = 0, used = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            nibble = (nibble << 1) | (c.colour(i, j) == Colour::Red ? 1 : 0);
            if (++used == 4) {
                out.push_back("0123456789ABCDEF"[nibble]);
                nibble = used = 0;
            }
        }
    }
    if (used > 0) out.push_back("0123456789ABCDEF"[nibble << (4 - used)]);
    return out;
}

TwoColouring decode_colouring(const std::string& text) {
    std::istringstream in(text);
    std::string tag;
    long long n = -1;
    if (!(in >> tag) || tag != "RB")
        throw ParseError("colouring codec: expected 'RB' header");
    if (!(in >> n) || n < 0)
        throw ParseError("colouring codec: bad order after 'RB'");
    std::string hex;
    in >> hex;
    std::string rest;
    if (in >> rest)
        throw ParseError("colouring codec: trailing data '" + rest + "'");

    long long npairs = n * (n - 1) / 2;
    long long want_digits = (npairs + 3) / 4;
    if (static_cast<long long>(hex.size()) != want_digits)
        throw ParseError("colouring codec: bit count mismatch for N=" +
                         std::to_string(n) + ": expected " +
                         std::to_string(want_digits) + " hex digits, got " +
                         std::to_string(hex.size()));

    TwoColouring c(static_cast<int>(n));
    long long bit = 0;
    int pi = 0, pj = 1; // next pair in lexicographic order
    for (std::size_t d = 0; d < hex.size(); ++d) {
        char ch = hex[d];
        int v;
        if (ch >= '0' && ch <= '9') v = ch - '0';
        else if (ch >= 'A' && ch <= 'F') v = ch - 'A' + 10;
        else if (ch >= 'a' && ch <= 'f') v = ch - 'a' + 10;
        else
            throw ParseError("colouring codec: bad hex digit at offset " +
                             std::to_string(d));
        for (int k = 3; k >= 0; --k, ++bit) {
            bool red = (v >> k) & 1;
            if (bit >= npairs) {
                if (red)
                    throw ParseError("colouring codec: nonzero padding bits");
                continue;
            }
            if (red) c.paint(pi, pj, Colour::Red);
            if (++pj == n) {
                ++pi;
                pj = pi + 1;
            }
        }
    }
    return c;
}

} // namespace ramseykit
