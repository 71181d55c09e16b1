#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "specturan/graph.hpp"
#include "specturan/rng.hpp"

namespace specturan {

struct CliqueProfile {
    std::vector<std::uint64_t> counts;  // counts[i] = number of i-cliques, 1-based
    int clique_number = 0;              // omega(G), independent of ellmax

    std::uint64_t k(int i) const {
        return (i >= 1 && i < static_cast<int>(counts.size())) ? counts[i] : 0;
    }
};

namespace detail {

inline void clique_extend(const Graph& g, const std::vector<int>& cand, int depth,
                          int ellmax, std::vector<std::uint64_t>& counts) {
    for (std::size_t i = 0; i < cand.size(); ++i) {
        const int v = cand[i];
        ++counts[depth + 1];
        if (depth + 1 >= ellmax) continue;
        std::vector<int> next;
        const auto& nb = g.neighbors(v);
        std::set_intersection(cand.begin() + static_cast<long>(i) + 1, cand.end(),
                              nb.begin(), nb.end(), std::back_inserter(next));
        if (!next.empty()) clique_extend(g, next, depth + 1, ellmax, counts);
    }
}

// Branch and bound max clique with a greedy-coloring bound.
inline void max_clique_expand(const std::vector<std::vector<char>>& adj,
                              std::vector<int>& cur, std::vector<int>& cand,
                              std::vector<int>& best) {
    if (cand.empty()) {
        if (cur.size() > best.size()) best = cur;
        return;
    }
    // greedy coloring of candidates; color index bounds the clique extension
    std::vector<int> color(cand.size());
    std::vector<std::vector<int>> classes;
    for (std::size_t i = 0; i < cand.size(); ++i) {
        std::size_t c = 0;
        for (; c < classes.size(); ++c) {
            bool clash = false;
            for (int w : classes[c])
                if (adj[cand[i]][w]) { clash = true; break; }
            if (!clash) break;
        }
        if (c == classes.size()) classes.emplace_back();
        classes[c].push_back(cand[i]);
        color[i] = static_cast<int>(c) + 1;
    }
    // visit in nondecreasing color so pruning fires early on the tail
    std::vector<std::size_t> order(cand.size());
    for (std::size_t i = 0; i < cand.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return color[a] < color[b]; });
    std::vector<int> sorted(cand.size());
    std::vector<int> sorted_color(cand.size());
    for (std::size_t i = 0; i < cand.size(); ++i) {
        sorted[i] = cand[order[i]];
        sorted_color[i] = color[order[i]];
    }
    for (std::size_t idx = sorted.size(); idx-- > 0;) {
        if (cur.size() + sorted_color[idx] <= best.size()) return;
        const int v = sorted[idx];
        cur.push_back(v);
        std::vector<int> next;
        for (std::size_t j = 0; j < idx; ++j)
            if (adj[v][sorted[j]]) next.push_back(sorted[j]);
        max_clique_expand(adj, cur, next, best);
        cur.pop_back();
    }
}

}  // namespace detail

inline std::vector<int> max_clique(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return {};
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (const Edge& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = 1;
    std::vector<int> cur, best, cand(n);
    for (int v = 0; v < n; ++v) cand[v] = v;
    detail::max_clique_expand(adj, cur, cand, best);
    std::sort(best.begin(), best.end());
    return best;
}

inline int clique_number(const Graph& g) {
    return static_cast<int>(max_clique(g).size());
}

// Exact i-clique counts for i <= ellmax via ordered-neighborhood recursion.
inline CliqueProfile clique_profile(const Graph& g, int ellmax = 8) {
    if (ellmax < 1 || ellmax > 8) throw Error("clique_profile requires 1 <= ellmax <= 8");
    CliqueProfile p;
    p.counts.assign(ellmax + 1, 0);
    std::vector<int> all(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) all[v] = v;
    detail::clique_extend(g, all, 0, ellmax, p.counts);
    p.clique_number = clique_number(g);
    return p;
}

namespace detail {

// Backtracking monomorphism f -> g. Pattern vertices are visited in an order
// that keeps each new vertex adjacent to an already-mapped one when possible.
struct SubgraphMatcher {
    const Graph& g;
    const Graph& f;
    std::vector<int> order;       // f vertices in matching order
    std::vector<int> map;         // f vertex -> g vertex or -1
    std::vector<char> used;       // g vertex used

    SubgraphMatcher(const Graph& gg, const Graph& ff) : g(gg), f(ff) {
        const int nf = f.vertex_count();
        map.assign(nf, -1);
        used.assign(g.vertex_count(), 0);
        std::vector<char> placed(nf, 0);
        // repeatedly grow from the highest-degree unplaced vertex
        while (static_cast<int>(order.size()) < nf) {
            int pick = -1;
            for (int v = 0; v < nf; ++v) {
                if (placed[v]) continue;
                bool touches = false;
                for (int w : f.neighbors(v))
                    if (placed[w]) { touches = true; break; }
                if (touches && (pick < 0 || f.degree(v) > f.degree(pick))) pick = v;
            }
            if (pick < 0) {
                for (int v = 0; v < nf; ++v)
                    if (!placed[v] && (pick < 0 || f.degree(v) > f.degree(pick)))
                        pick = v;
            }
            placed[pick] = 1;
            order.push_back(pick);
        }
    }

    bool feasible(int fv, int gv) const {
        if (used[gv] || g.degree(gv) < f.degree(fv)) return false;
        for (int w : f.neighbors(fv)) {
            if (map[w] >= 0 && !g.has_edge(gv, map[w])) return false;
        }
        return true;
    }

    bool extend(std::size_t pos) {
        if (pos == order.size()) return true;
        const int fv = order[pos];
        if (map[fv] >= 0) return extend(pos + 1);  // pre-assigned
        for (int gv = 0; gv < g.vertex_count(); ++gv) {
            if (!feasible(fv, gv)) continue;
            map[fv] = gv;
            used[gv] = 1;
            if (extend(pos + 1)) return true;
            map[fv] = -1;
            used[gv] = 0;
        }
        return false;
    }
};

}  // namespace detail

// One embedding of f into g as a (not necessarily induced) subgraph, as a
// map f-vertex -> g-vertex, or nullopt.
inline std::optional<std::vector<int>> find_subgraph(const Graph& g, const Graph& f) {
    if (f.vertex_count() == 0) return std::vector<int>{};
    if (f.vertex_count() > g.vertex_count()) return std::nullopt;
    detail::SubgraphMatcher m(g, f);
    if (m.extend(0)) return m.map;
    return std::nullopt;
}

inline bool is_f_free(const Graph& g, const Graph& f) {
    return !find_subgraph(g, f).has_value();
}

// Embedding of f that covers the g-edge (x, y); the incremental check used
// after inserting one edge into an f-free graph.
inline std::optional<std::vector<int>>
find_subgraph_with_edge(const Graph& g, const Graph& f, int x, int y) {
    if (f.vertex_count() > g.vertex_count()) return std::nullopt;
    for (const Edge& fe : f.edges()) {
        for (auto [a, b] : {std::pair{x, y}, std::pair{y, x}}) {
            detail::SubgraphMatcher m(g, f);
            if (!m.feasible(fe.u, a)) continue;
            m.map[fe.u] = a;
            m.used[a] = 1;
            if (!m.feasible(fe.v, b)) continue;
            m.map[fe.v] = b;
            m.used[b] = 1;
            if (m.extend(0)) return m.map;
        }
    }
    return std::nullopt;
}

namespace detail {

inline bool k_colorable(const Graph& f, int k, std::vector<int>& coloring) {
    const int n = f.vertex_count();
    coloring.assign(n, -1);
    // most-constrained-first backtracking
    struct Rec {
        const Graph& f;
        int k;
        std::vector<int>& col;
        bool go() {
            int pick = -1, best_free = 1 << 30;
            for (int v = 0; v < f.vertex_count(); ++v) {
                if (col[v] >= 0) continue;
                std::vector<char> seen(k, 0);
                for (int w : f.neighbors(v))
                    if (col[w] >= 0) seen[col[w]] = 1;
                int free_cnt = 0;
                for (int c = 0; c < k; ++c)
                    if (!seen[c]) ++free_cnt;
                if (free_cnt == 0) return false;
                if (free_cnt < best_free ||
                    (free_cnt == best_free &&
                     (pick < 0 || f.degree(v) > f.degree(pick)))) {
                    best_free = free_cnt;
                    pick = v;
                }
            }
            if (pick < 0) return true;
            std::vector<char> seen(k, 0);
            for (int w : f.neighbors(pick))
                if (col[w] >= 0) seen[col[w]] = 1;
            int cap = 0;  // symmetry break: at most one brand-new color
            for (int v = 0; v < f.vertex_count(); ++v) cap = std::max(cap, col[v] + 1);
            for (int c = 0; c < std::min(k, cap + 1); ++c) {
                if (seen[c]) continue;
                col[pick] = c;
                if (go()) return true;
                col[pick] = -1;
            }
            return false;
        }
    } rec{f, k, coloring};
    return rec.go();
}

}  // namespace detail

inline int chromatic_number(const Graph& f) {
    const int n = f.vertex_count();
    if (n == 0) return 0;
    if (n > 12) throw Error("chromatic_number capped at 12 vertices");
    if (f.edge_count() == 0) return 1;
    std::vector<int> coloring;
    for (int k = clique_number(f); k <= n; ++k)
        if (detail::k_colorable(f, k, coloring)) return k;
    return n;
}

inline int codegree(const Graph& g, int u, int v) {
    if (u == v) return g.degree(u);  // C(i,i) is the degree
    const auto& a = g.neighbors(u);
    const auto& b = g.neighbors(v);
    int c = 0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) ++ia;
        else if (*ib < *ia) ++ib;
        else { ++c; ++ia; ++ib; }
    }
    return c;
}

struct CodegreeData {
    int max_codegree = 0;          // t = max_{i != j} C_{i,j}
    std::pair<int, int> witness{-1, -1};
};

inline CodegreeData codegree_data(const Graph& g) {
    if (g.vertex_count() < 2) throw Error("codegree_data requires n >= 2");
    CodegreeData d;
    d.witness = {0, 1};
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v) {
            const int c = codegree(g, u, v);
            if (c > d.max_codegree) {
                d.max_codegree = c;
                d.witness = {u, v};
            }
        }
    return d;
}

struct K2tResult {
    int u = -1, v = -1;
    int t = 0;
    std::vector<int> common;
};

// The codegree-maximizing pair with its full common neighborhood: a maximum
// K_{2,t} in g.
inline K2tResult find_k2t(const Graph& g) {
    const auto d = codegree_data(g);
    K2tResult r;
    r.u = d.witness.first;
    r.v = d.witness.second;
    const auto& a = g.neighbors(r.u);
    const auto& b = g.neighbors(r.v);
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(r.common));
    r.t = static_cast<int>(r.common.size());
    return r;
}

struct KstResult {
    std::vector<int> left;   // |left| = s
    std::vector<int> right;  // common neighborhood of left, disjoint from it
    int t = 0;
    bool exact = true;       // false = greedy lower bound
};

namespace detail {

inline std::vector<int> common_neighbors(const Graph& g, const std::vector<int>& s) {
    std::vector<int> common = g.neighbors(s[0]);
    for (std::size_t i = 1; i < s.size(); ++i) {
        std::vector<int> next;
        const auto& nb = g.neighbors(s[i]);
        std::set_intersection(common.begin(), common.end(), nb.begin(), nb.end(),
                              std::back_inserter(next));
        common = std::move(next);
    }
    std::vector<int> out;
    std::set_difference(common.begin(), common.end(), s.begin(), s.end(),
                        std::back_inserter(out));
    return out;
}

}  // namespace detail

// Maximum K_{s,t}: exhaustive over s-subsets for n <= 40, greedy from the
// 32 best codegree pairs beyond that (flagged as a lower bound).
inline KstResult find_kst(const Graph& g, int s) {
    if (s < 2 || s > 4) throw Error("find_kst requires 2 <= s <= 4");
    const int n = g.vertex_count();
    if (n < s) throw Error("find_kst: graph smaller than s");
    KstResult best;
    if (n <= 40) {
        std::vector<int> subset(s);
        auto consider = [&](const std::vector<int>& sub) {
            auto common = detail::common_neighbors(g, sub);
            if (static_cast<int>(common.size()) > best.t || best.left.empty()) {
                best.left = sub;
                best.right = common;
                best.t = static_cast<int>(common.size());
            }
        };
        // iterate all s-subsets in lexicographic order
        for (int i = 0; i < s; ++i) subset[i] = i;
        while (true) {
            consider(subset);
            int pos = s - 1;
            while (pos >= 0 && subset[pos] == n - s + pos) --pos;
            if (pos < 0) break;
            ++subset[pos];
            for (int i = pos + 1; i < s; ++i) subset[i] = subset[i - 1] + 1;
        }
        best.exact = true;
        return best;
    }
    // greedy with restarts from top-codegree seed pairs
    std::vector<std::tuple<int, int, int>> pairs;  // (codegree, u, v)
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(codegree(g, u, v), u, v);
    std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
        if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) > std::get<0>(b);
        return std::make_pair(std::get<1>(a), std::get<2>(a)) <
               std::make_pair(std::get<1>(b), std::get<2>(b));
    });
    const int restarts = std::min<int>(32, static_cast<int>(pairs.size()));
    for (int rstart = 0; rstart < restarts; ++rstart) {
        std::vector<int> sub = {std::get<1>(pairs[rstart]), std::get<2>(pairs[rstart])};
        while (static_cast<int>(sub.size()) < s) {
            int pick = -1, pick_t = -1;
            for (int w = 0; w < n; ++w) {
                if (std::find(sub.begin(), sub.end(), w) != sub.end()) continue;
                auto trial = sub;
                trial.push_back(w);
                std::sort(trial.begin(), trial.end());
                const int t = static_cast<int>(detail::common_neighbors(g, trial).size());
                if (t > pick_t) { pick_t = t; pick = w; }
            }
            sub.push_back(pick);
            std::sort(sub.begin(), sub.end());
        }
        auto common = detail::common_neighbors(g, sub);
        if (static_cast<int>(common.size()) > best.t || best.left.empty()) {
            best.left = sub;
            best.right = common;
            best.t = static_cast<int>(common.size());
        }
    }
    best.exact = false;
    return best;
}

// Set of cycle lengths realized in g, up to lmax. DFS from each root (the
// root is the smallest vertex on its cycles) with a distance-to-root budget
// prune; stops once every length in [3, lmax] is realized.
inline std::set<int> cycle_spectrum(const Graph& g, int lmax) {
    if (lmax > 20) throw Error("cycle_spectrum capped at length 20");
    std::set<int> found;
    const int n = g.vertex_count();
    if (lmax < 3 || n == 0) return found;
    const int want = std::min(lmax, n);
    std::vector<int> dist(n);
    std::vector<char> onpath(n, 0);
    std::vector<int> path;

    auto all_found = [&] {
        for (int l = 3; l <= want; ++l)
            if (!found.count(l)) return false;
        return true;
    };

    for (int root = 0; root < n && !all_found(); ++root) {
        // BFS distances to the root among vertices >= root
        std::fill(dist.begin(), dist.end(), -1);
        std::queue<int> q;
        dist[root] = 0;
        q.push(root);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : g.neighbors(u))
                if (w >= root && dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    q.push(w);
                }
        }
        path.assign(1, root);
        onpath[root] = 1;
        auto dfs = [&](auto&& self, int u) -> void {
            if (all_found()) return;
            for (int w : g.neighbors(u)) {
                if (w < root) continue;
                const int len = static_cast<int>(path.size());
                if (w == root && len >= 3) found.insert(len);
                if (onpath[w] || len >= lmax) continue;
                if (dist[w] < 0 || len + dist[w] > lmax) continue;
                onpath[w] = 1;
                path.push_back(w);
                self(self, w);
                path.pop_back();
                onpath[w] = 0;
            }
        };
        dfs(dfs, root);
        onpath[root] = 0;
    }
    return found;
}

// Lowest-index vertex whose neighborhood is dense: e(N(i)) > threshold*|N(i)|
// (strict, matching the source inequality).
inline std::optional<int> dense_neighborhood(const Graph& g, double threshold) {
    if (threshold < 0) throw Error("dense_neighborhood requires threshold >= 0");
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& nb = g.neighbors(v);
        long long inside = 0;
        for (int u : nb) {
            const auto& un = g.neighbors(u);
            std::vector<int> tmp;
            std::set_intersection(un.begin(), un.end(), nb.begin(), nb.end(),
                                  std::back_inserter(tmp));
            inside += static_cast<long long>(tmp.size());
        }
        inside /= 2;
        if (static_cast<double>(inside) > threshold * static_cast<double>(nb.size()))
            return v;
    }
    return std::nullopt;
}

struct TriangleHypergraph {
    std::vector<std::array<int, 3>> triples;  // one per triangle, sorted
    std::vector<Edge> shadow;                 // 2-sets covered by a triple
};

inline TriangleHypergraph triangle_hypergraph(const Graph& g) {
    TriangleHypergraph h;
    std::set<Edge> shadow;
    for (const Edge& e : g.edges()) {
        const auto& a = g.neighbors(e.u);
        const auto& b = g.neighbors(e.v);
        std::vector<int> common;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                              std::back_inserter(common));
        for (int w : common) {
            if (w <= e.v) continue;  // count each triangle once: u < v < w
            h.triples.push_back({e.u, e.v, w});
            shadow.insert(Edge(e.u, e.v));
            shadow.insert(Edge(e.u, w));
            shadow.insert(Edge(e.v, w));
        }
    }
    h.shadow.assign(shadow.begin(), shadow.end());
    return h;
}

inline std::optional<std::array<int, 3>> find_triangle(const Graph& g) {
    for (const Edge& e : g.edges()) {
        const auto& a = g.neighbors(e.u);
        const auto& b = g.neighbors(e.v);
        std::vector<int> common;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                              std::back_inserter(common));
        if (!common.empty()) return std::array<int, 3>{e.u, e.v, common.front()};
    }
    return std::nullopt;
}

}  // namespace specturan
