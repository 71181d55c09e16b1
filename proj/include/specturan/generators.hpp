#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "specturan/graph.hpp"
#include "specturan/rng.hpp"

namespace specturan {

// Balanced complete r-partite graph on n vertices; the first n mod r parts
// take the extra vertex. Parts are contiguous vertex ranges.
inline std::pair<Graph, VertexPartition> gen_turan(int n, int r) {
    if (r < 2) throw Error("gen_turan requires r >= 2");
    if (n < r) throw Error("gen_turan requires n >= r");
    std::vector<std::vector<int>> parts(r);
    const int base = n / r, extra = n % r;
    int next = 0;
    for (int p = 0; p < r; ++p) {
        const int size = base + (p < extra ? 1 : 0);
        for (int i = 0; i < size; ++i) parts[p].push_back(next++);
    }
    Graph g(n);
    for (int p = 0; p < r; ++p)
        for (int q = p + 1; q < r; ++q)
            for (int u : parts[p])
                for (int v : parts[q]) g.add_edge(u, v);
    return {std::move(g), VertexPartition(std::move(parts))};
}

inline std::pair<Graph, VertexPartition> gen_complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw Error("gen_complete_bipartite requires a,b >= 1");
    Graph g(a + b);
    std::vector<int> left, right;
    for (int u = 0; u < a; ++u) left.push_back(u);
    for (int v = a; v < a + b; ++v) right.push_back(v);
    for (int u : left)
        for (int v : right) g.add_edge(u, v);
    return {std::move(g), VertexPartition({left, right})};
}

inline Graph gen_complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph gen_empty(int n) { return Graph(n); }

inline Graph gen_path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline Graph gen_cycle(int n) {
    if (n < 3) throw Error("gen_cycle requires n >= 3");
    Graph g = gen_path(n);
    g.add_edge(n - 1, 0);
    return g;
}

inline Graph gen_star(int leaves) {
    return gen_complete_bipartite(1, leaves).first;
}

// G(n, p): each pair present independently with probability p; a fixed seed
// gives a fixed graph on every platform.
inline Graph gen_gnp(int n, double p, std::uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw Error("gen_gnp requires 0 <= p <= 1");
    SplitMix64 rng(seed);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_double() < p) g.add_edge(u, v);
    return g;
}

// Join: every vertex of a adjacent to every vertex of b; b is shifted past a.
inline Graph graph_join(const Graph& a, const Graph& b) {
    const int na = a.vertex_count();
    Graph g(na + b.vertex_count());
    for (const Edge& e : a.edges()) g.add_edge(e.u, e.v);
    for (const Edge& e : b.edges()) g.add_edge(na + e.u, na + e.v);
    for (int u = 0; u < na; ++u)
        for (int v = 0; v < b.vertex_count(); ++v) g.add_edge(u, na + v);
    return g;
}

inline Graph graph_disjoint_union(const Graph& a, const Graph& b) {
    const int na = a.vertex_count();
    Graph g(na + b.vertex_count());
    for (const Edge& e : a.edges()) g.add_edge(e.u, e.v);
    for (const Edge& e : b.edges()) g.add_edge(na + e.u, na + e.v);
    return g;
}

}  // namespace specturan
