#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "specturan/graph.hpp"

namespace specturan {

// Walk counts are exact integers. They grow like lambda^ell, so the
// accumulator is 128-bit; crossing 64 bits is flagged, overflowing 128 bits
// is rejected (unreachable under the ell <= 12 desk-scale cap).
using WalkCount = unsigned __int128;

inline std::string walk_count_to_string(WalkCount v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    return {s.rbegin(), s.rend()};
}

inline double walk_count_to_double(WalkCount v) { return static_cast<double>(v); }

struct WalkTable {
    int ell = 1;
    WalkCount total = 0;                       // w_ell(G)
    std::vector<WalkCount> from_vertex;        // w_ell(i)
    std::vector<std::vector<WalkCount>> between;  // w_ell(i,j), on demand
    bool exceeds_uint64 = false;
};

namespace detail {

inline WalkCount checked_add(WalkCount a, WalkCount b) {
    const WalkCount s = a + b;
    if (s < a) throw Error("walk count overflows 128 bits");
    return s;
}

inline std::vector<WalkCount> adjacency_apply(const Graph& g,
                                              const std::vector<WalkCount>& v) {
    std::vector<WalkCount> out(v.size(), 0);
    for (int u = 0; u < g.vertex_count(); ++u) {
        WalkCount s = 0;
        for (int w : g.neighbors(u)) s = checked_add(s, v[w]);
        out[u] = s;
    }
    return out;
}

}  // namespace detail

// w_ell(i) = (A^{ell-1} 1)_i by repeated adjacency application; with
// with_between, w_ell(i,j) = (A^{ell-1})_{ij} from indicator vectors.
inline WalkTable walk_table(const Graph& g, int ell, bool with_between = false) {
    if (ell < 1 || ell > 12) throw Error("walk_table requires 1 <= ell <= 12");
    const int n = g.vertex_count();
    WalkTable t;
    t.ell = ell;
    std::vector<WalkCount> v(n, 1);
    for (int step = 0; step < ell - 1; ++step) v = detail::adjacency_apply(g, v);
    t.from_vertex = v;
    for (int i = 0; i < n; ++i) t.total = detail::checked_add(t.total, v[i]);
    t.exceeds_uint64 =
        t.total > static_cast<WalkCount>(std::numeric_limits<std::uint64_t>::max());
    if (with_between) {
        t.between.assign(n, {});
        for (int i = 0; i < n; ++i) {
            std::vector<WalkCount> e(n, 0);
            e[i] = 1;
            for (int step = 0; step < ell - 1; ++step)
                e = detail::adjacency_apply(g, e);
            t.between[i] = std::move(e);
        }
    }
    return t;
}

}  // namespace specturan
