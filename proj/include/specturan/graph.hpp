#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace specturan {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : Error {
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error(what + " (line " + std::to_string(line) + ", byte " +
                std::to_string(column) + ")"),
          line(line), column(column) {}
    std::size_t line;
    std::size_t column;
};

// Precondition violation; carries an optional vertex witness (e.g. a clique
// or a triangle found where none was allowed).
struct PreconditionError : Error {
    explicit PreconditionError(const std::string& what,
                               std::vector<int> witness = {})
        : Error(what), witness(std::move(witness)) {}
    std::vector<int> witness;
};

struct Edge {
    int u, v;  // normalized u < v
    Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {}
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Undirected simple graph over dense 0-based vertices. Neighbor lists are
// kept sorted; no self-loops, no parallel edges.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(static_cast<std::size_t>(check_n(n))) {}

    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    std::size_t edge_count() const { return m_; }

    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }

    int max_degree() const {
        int d = 0;
        for (const auto& nb : adj_) d = std::max(d, static_cast<int>(nb.size()));
        return d;
    }

    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }

    bool has_edge(int u, int v) const {
        if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) return false;
        if (u == v) return false;
        const auto& nb = adj_[u];
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw Error("self-loop rejected at vertex " + std::to_string(u));
        if (has_edge(u, v)) {
            throw Error("duplicate edge rejected: " + std::to_string(u) + " " +
                        std::to_string(v));
        }
        insert_sorted(adj_[u], v);
        insert_sorted(adj_[v], u);
        ++m_;
    }

    void remove_edge(int u, int v) {
        if (!has_edge(u, v)) {
            throw Error("cannot remove absent edge: " + std::to_string(u) + " " +
                        std::to_string(v));
        }
        erase_sorted(adj_[u], v);
        erase_sorted(adj_[v], u);
        --m_;
    }

    // Edges in lexicographic (u, v) order with u < v.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(m_);
        for (int u = 0; u < vertex_count(); ++u)
            for (int v : adj_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    // Appends a fresh isolated vertex, returns its index.
    int add_vertex() {
        adj_.emplace_back();
        return vertex_count() - 1;
    }

    // Drops isolated vertices and relabels the rest densely. The paper-side
    // convention keeps them unless this is called explicitly.
    Graph strip_isolated() const {
        std::vector<int> map(adj_.size(), -1);
        int next = 0;
        for (int v = 0; v < vertex_count(); ++v)
            if (!adj_[v].empty()) map[v] = next++;
        Graph g(next);
        for (int u = 0; u < vertex_count(); ++u)
            for (int v : adj_[u])
                if (u < v) g.add_edge(map[u], map[v]);
        return g;
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    static int check_n(int n) {
        if (n < 0) throw Error("negative vertex count");
        return n;
    }
    void check_vertex(int v) const {
        if (v < 0 || v >= vertex_count())
            throw Error("vertex out of range: " + std::to_string(v));
    }
    static void insert_sorted(std::vector<int>& nb, int v) {
        nb.insert(std::lower_bound(nb.begin(), nb.end(), v), v);
    }
    static void erase_sorted(std::vector<int>& nb, int v) {
        nb.erase(std::lower_bound(nb.begin(), nb.end(), v));
    }

    std::vector<std::vector<int>> adj_;
    std::size_t m_ = 0;
};

// Disjoint vertex sets; the union may cover only part of V.
struct VertexPartition {
    std::vector<std::vector<int>> parts;

    VertexPartition() = default;
    explicit VertexPartition(std::vector<std::vector<int>> p) : parts(std::move(p)) {
        for (auto& part : parts) std::sort(part.begin(), part.end());
        validate_disjoint();
    }

    std::vector<int> covered() const {
        std::vector<int> all;
        for (const auto& p : parts) all.insert(all.end(), p.begin(), p.end());
        std::sort(all.begin(), all.end());
        return all;
    }

    bool balanced() const {
        if (parts.empty()) return true;
        std::size_t lo = parts[0].size(), hi = parts[0].size();
        for (const auto& p : parts) {
            lo = std::min(lo, p.size());
            hi = std::max(hi, p.size());
        }
        return hi - lo <= 1;
    }

    void validate_disjoint() const {
        auto all = covered();
        if (std::adjacent_find(all.begin(), all.end()) != all.end())
            throw Error("partition parts overlap");
    }
};

struct GraphDelta {
    std::vector<Edge> added;
    std::vector<Edge> removed;
    std::size_t edit_count() const { return added.size() + removed.size(); }
};

inline Graph apply_delta(const Graph& g, const GraphDelta& delta) {
    Graph out = g;
    for (const Edge& e : delta.removed) {
        if (!g.has_edge(e.u, e.v))
            throw Error("delta removes absent edge: " + std::to_string(e.u) + " " +
                        std::to_string(e.v));
        out.remove_edge(e.u, e.v);
    }
    for (const Edge& e : delta.added) {
        if (g.has_edge(e.u, e.v))
            throw Error("delta adds present edge: " + std::to_string(e.u) + " " +
                        std::to_string(e.v));
        out.add_edge(e.u, e.v);
    }
    return out;
}

inline GraphDelta inverse_delta(const GraphDelta& delta) {
    return GraphDelta{delta.removed, delta.added};
}

// Deviation count between g and the complete multipartite template on the
// declared parts: intra-part edges, edges leaving the covered set, and
// missing cross pairs all count. The returned delta realizes the count.
inline std::pair<std::size_t, GraphDelta>
edit_distance_template(const Graph& g, const VertexPartition& partition,
                       bool require_balanced) {
    partition.validate_disjoint();
    if (require_balanced && !partition.balanced())
        throw Error("Turan template requires part sizes differing by at most 1");
    const int n = g.vertex_count();
    std::vector<int> part_of(n, -1);
    for (std::size_t p = 0; p < partition.parts.size(); ++p)
        for (int v : partition.parts[p]) {
            if (v < 0 || v >= n) throw Error("template vertex outside graph");
            part_of[v] = static_cast<int>(p);
        }

    GraphDelta delta;
    for (const Edge& e : g.edges()) {
        const int pu = part_of[e.u], pv = part_of[e.v];
        if (pu < 0 || pv < 0 || pu == pv) delta.removed.push_back(e);
    }
    for (std::size_t p = 0; p < partition.parts.size(); ++p)
        for (std::size_t q = p + 1; q < partition.parts.size(); ++q)
            for (int u : partition.parts[p])
                for (int v : partition.parts[q])
                    if (!g.has_edge(u, v)) delta.added.emplace_back(u, v);
    std::sort(delta.added.begin(), delta.added.end());
    return {delta.edit_count(), delta};
}

inline std::pair<std::size_t, GraphDelta>
biclique_distance(const Graph& g, const std::vector<int>& a, const std::vector<int>& b) {
    return edit_distance_template(g, VertexPartition({a, b}), false);
}

inline std::pair<std::size_t, GraphDelta>
turan_distance(const Graph& g, const VertexPartition& partition) {
    return edit_distance_template(g, partition, true);
}

// Connected components ordered by smallest member vertex; component ids are
// positions in the returned list.
inline std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(g.vertex_count(), 0);
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (seen[s]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            comp.push_back(u);
            for (int v : g.neighbors(u))
                if (!seen[v]) {
                    seen[v] = 1;
                    q.push(v);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

// 2-coloring if one exists; component containing the lowest vertex gets that
// vertex on side A, so the result is deterministic.
inline std::optional<VertexPartition> bipartition_of(const Graph& g) {
    std::vector<int> color(g.vertex_count(), -1);
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.neighbors(u)) {
                if (color[v] < 0) {
                    color[v] = 1 - color[u];
                    q.push(v);
                } else if (color[v] == color[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    std::vector<int> a, b;
    for (int v = 0; v < g.vertex_count(); ++v)
        (color[v] == 0 ? a : b).push_back(v);
    return VertexPartition({a, b});
}

inline bool is_bipartite_across(const Graph& g, const VertexPartition& partition) {
    if (partition.parts.size() != 2) return false;
    std::vector<int> side(g.vertex_count(), -1);
    for (int p = 0; p < 2; ++p)
        for (int v : partition.parts[p]) side.at(v) = p;
    for (const Edge& e : g.edges()) {
        if (side[e.u] < 0 || side[e.v] < 0) continue;  // uncovered vertices
        if (side[e.u] == side[e.v]) return false;
    }
    return true;
}

}  // namespace specturan
