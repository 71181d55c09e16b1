#pragma once

#include <string>

#include "specturan/graph.hpp"

namespace specturan {

// graph6: header-less bit-packed upper triangle, columns (0,1),(0,2),(1,2),...
// Only the single-byte order form (n <= 62) is supported.

inline std::string graph6_encode(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 62) throw Error("graph6 encoding supports at most 62 vertices");
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int bitpos = 0;
    unsigned char acc = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = static_cast<unsigned char>(acc << 1) |
                  static_cast<unsigned char>(g.has_edge(i, j) ? 1 : 0);
            if (++bitpos == 6) {
                out.push_back(static_cast<char>(acc + 63));
                bitpos = 0;
                acc = 0;
            }
        }
    }
    if (bitpos > 0) {
        acc = static_cast<unsigned char>(acc << (6 - bitpos));
        out.push_back(static_cast<char>(acc + 63));
    }
    return out;
}

inline Graph graph6_decode(const std::string& s) {
    if (s.empty()) throw ParseError("empty graph6 string", 1, 0);
    const unsigned char first = static_cast<unsigned char>(s[0]);
    if (first == 126) throw ParseError("extended graph6 order (n > 62) unsupported", 1, 0);
    if (first < 63 || first > 125)
        throw ParseError("invalid graph6 order byte", 1, 0);
    const int n = first - 63;
    Graph g(n);
    const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t nbytes = (nbits + 5) / 6;
    if (s.size() != 1 + nbytes)
        throw ParseError("graph6 body has wrong length for n=" + std::to_string(n),
                         1, s.size());
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            const std::size_t byte_index = 1 + bit / 6;
            const unsigned char c = static_cast<unsigned char>(s[byte_index]);
            if (c < 63 || c > 126)
                throw ParseError("invalid graph6 body byte", 1, byte_index);
            const int val = c - 63;
            if ((val >> (5 - bit % 6)) & 1) g.add_edge(i, j);
        }
    }
    // padding bits must be zero
    if (nbits % 6 != 0) {
        const unsigned char c = static_cast<unsigned char>(s.back());
        const int val = c - 63;
        const int pad = static_cast<int>(6 - nbits % 6);
        if (val & ((1 << pad) - 1))
            throw ParseError("nonzero graph6 padding bits", 1, s.size() - 1);
    }
    return g;
}

}  // namespace specturan
