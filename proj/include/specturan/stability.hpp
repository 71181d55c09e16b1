#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "specturan/counting.hpp"
#include "specturan/generators.hpp"
#include "specturan/graph.hpp"
#include "specturan/rng.hpp"
#include "specturan/spectral.hpp"

namespace specturan {

// ---------------------------------------------------------------------------
// edge classification against the flat profile alpha^2

struct EdgeClassification {
    double alpha = 0.0;  // ((1 - 1/r) / 2m)^{1/4}
    double delta = 0.0;
    std::vector<Edge> good;  // |x_i x_j - alpha^2| <= delta^{1/4} alpha^2
    std::vector<Edge> bad;
    double moment_sum = 0.0;  // sum_{ij in E} (x_i x_j - alpha^2)^2
    bool hypothesis_met = false;  // lambda^2 >= (1 - 1/r - delta) 2m
};

inline EdgeClassification classify_edges(const Graph& g, int r, double delta,
                                         double numeric_tol = 1e-8) {
    if (g.edge_count() == 0) throw Error("classify_edges requires m >= 1");
    if (r < 3) throw Error("classify_edges requires r >= 3");
    if (!(delta > 0.0 && delta < 1.0))
        throw Error("classify_edges requires delta in (0, 1)");
    const double m = static_cast<double>(g.edge_count());
    const auto p = perron(g);
    EdgeClassification c;
    c.alpha = std::pow((1.0 - 1.0 / r) / (2.0 * m), 0.25);
    c.delta = delta;
    const double a2 = c.alpha * c.alpha;
    const double threshold = std::pow(delta, 0.25) * a2;
    for (const Edge& e : g.edges()) {
        const double dev = p.x[e.u] * p.x[e.v] - a2;
        c.moment_sum += dev * dev;
        (std::abs(dev) <= threshold ? c.good : c.bad).push_back(e);
    }
    c.hypothesis_met =
        p.lambda * p.lambda >= (1.0 - 1.0 / r - delta) * 2.0 * m - numeric_tol;
    return c;
}

// ---------------------------------------------------------------------------
// Gamma_t peeling

struct PeelState {
    int ell = 1;
    double alpha = 0.0;
    double delta = 0.0;
    std::vector<std::vector<int>> gamma_sets;  // Gamma_1 .. Gamma_ell, nested
    std::vector<double> s_values;              // s_t = sum_{i in Gamma_t} x_i^2
};

struct PeelResult {
    PeelState state;
    std::vector<int> core;      // V' = V \ Gamma_ell
    std::vector<Edge> removed;  // R = edges meeting Gamma_ell
    bool hypothesis_met = false;
    double lambda = 0.0;
};

// Peels vertices whose Perron weight strays from alpha; Gamma_t thresholds
// grow linearly in t and ell = floor(delta^{-1/8}/2) (clamped to >= 1; the
// source bound needs small delta anyway).
inline PeelResult peel_clique_stability(const Graph& g, int r, double delta,
                                        double numeric_tol = 1e-8) {
    if (r < 3)
        throw Error("peel_clique_stability requires r >= 3 (use the biclique "
                    "route for r = 2)");
    if (!(delta > 0.0 && delta < 1.0))
        throw Error("peel_clique_stability requires delta in (0, 1)");
    detail::require_clique_free_stab(g, r);
    if (g.edge_count() == 0) throw Error("peel_clique_stability requires m >= 1");
    const double m = static_cast<double>(g.edge_count());
    const auto p = perron(g);

    PeelResult out;
    out.lambda = p.lambda;
    PeelState& st = out.state;
    st.alpha = std::pow((1.0 - 1.0 / r) / (2.0 * m), 0.25);
    st.delta = delta;
    long long ell = static_cast<long long>(std::floor(std::pow(delta, -0.125) / 2.0));
    ell = std::clamp<long long>(ell, 1, 100000);
    st.ell = static_cast<int>(ell);
    const double step = 2.0 * std::pow(delta, 0.25) * st.alpha;
    st.gamma_sets.resize(st.ell);
    st.s_values.assign(st.ell, 0.0);
    for (int t = 1; t <= st.ell; ++t) {
        auto& gamma = st.gamma_sets[t - 1];
        for (int v = 0; v < g.vertex_count(); ++v)
            if (std::abs(p.x[v] - st.alpha) >= step * t) gamma.push_back(v);
        for (int v : gamma) st.s_values[t - 1] += p.x[v] * p.x[v];
        if (gamma.empty()) {
            // all later sets are empty too; fill and stop scanning
            for (int u = t + 1; u <= st.ell; ++u) st.gamma_sets[u - 1].clear();
            break;
        }
    }
    std::vector<char> peeled(g.vertex_count(), 0);
    for (int v : st.gamma_sets[st.ell - 1]) peeled[v] = 1;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!peeled[v]) out.core.push_back(v);
    for (const Edge& e : g.edges())
        if (peeled[e.u] || peeled[e.v]) out.removed.push_back(e);
    out.hypothesis_met =
        p.lambda * p.lambda >= (1.0 - 1.0 / r - delta) * 2.0 * m - numeric_tol;
    return out;
}

namespace detail {

inline void require_clique_free_stab(const Graph& g, int r) {
    const auto witness = find_subgraph(g, gen_complete(r + 1));
    if (witness)
        throw PreconditionError("graph contains K_" + std::to_string(r + 1),
                                *witness);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// bad-edge pruning

struct PruneResult {
    Graph pruned;
    std::vector<Edge> removed;  // in deletion order
    bool cap_reached = false;   // hit the ceil(4 eps m) contradiction bound
};

// Repeatedly recompute the Perron vector and delete the lowest-product edge
// violating x_i x_j >= eps m^{-1/2} (m = original edge count). One deletion
// per eigensolve; ties break lexicographically.
inline PruneResult prune_bad_edges(const Graph& g, double eps) {
    if (!(eps > 0.0 && eps < 0.01))
        throw Error("prune_bad_edges requires eps in (0, 0.01)");
    PruneResult res;
    res.pruned = g;
    if (g.edge_count() == 0) return res;
    const double m = static_cast<double>(g.edge_count());
    const double threshold = eps / std::sqrt(m);
    const std::size_t cap =
        static_cast<std::size_t>(std::ceil(4.0 * eps * m));
    while (res.pruned.edge_count() > 0) {
        if (res.removed.size() >= cap) {
            res.cap_reached = true;
            break;
        }
        const auto p = perron(res.pruned);
        std::optional<Edge> worst;
        double worst_product = threshold;
        for (const Edge& e : res.pruned.edges()) {
            const double prod = p.x[e.u] * p.x[e.v];
            if (prod < worst_product ||
                (worst && prod == worst_product && e < *worst)) {
                worst = e;
                worst_product = prod;
            }
        }
        if (!worst) break;
        res.pruned.remove_edge(worst->u, worst->v);
        res.removed.push_back(*worst);
    }
    return res;
}

// ---------------------------------------------------------------------------
// triangle-free bipartization

struct BipartizeResult {
    VertexPartition partition;  // ({u} union W, N(u))
    std::vector<Edge> removed;  // edges inside W
    int peak_vertex = -1;       // argmax Perron entry, lowest index on ties
};

inline BipartizeResult bipartize_triangle_free(const Graph& g) {
    if (g.edge_count() == 0) throw Error("bipartize_triangle_free requires m >= 1");
    if (auto t = find_triangle(g))
        throw PreconditionError("graph contains a triangle",
                                {(*t)[0], (*t)[1], (*t)[2]});
    const auto p = perron(g);
    int u = 0;
    for (int v = 1; v < g.vertex_count(); ++v)
        if (p.x[v] > p.x[u]) u = v;  // strict: ties keep the lowest index
    BipartizeResult res;
    res.peak_vertex = u;
    std::vector<char> in_u_side(g.vertex_count(), 0);
    std::vector<int> side_a = {u}, side_b;
    for (int w : g.neighbors(u)) {
        side_b.push_back(w);
        in_u_side[w] = 1;
    }
    in_u_side[u] = 1;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!in_u_side[v]) side_a.push_back(v);  // W
    std::sort(side_a.begin(), side_a.end());
    res.partition = VertexPartition({side_a, side_b});
    // edges inside W are exactly the deviations: N(u) is independent in a
    // triangle-free graph
    std::vector<char> in_w(g.vertex_count(), 0);
    for (int v : side_a)
        if (v != u) in_w[v] = 1;
    for (const Edge& e : g.edges())
        if (in_w[e.u] && in_w[e.v]) res.removed.push_back(e);
    return res;
}

// ---------------------------------------------------------------------------
// certificates

struct PipelineStage {
    std::string stage;
    std::size_t edges_removed = 0;
    double lambda_before = 0.0;
    double lambda_after = 0.0;
};

struct StabilityCertificate {
    enum class Kind { biclique, turan };
    Kind kind = Kind::biclique;
    VertexPartition parts;
    std::size_t edit_count = 0;
    double edit_fraction = 0.0;
    double delta_used = 0.0;
    double eps_target = 0.0;
    bool hypothesis_met = true;
    std::vector<PipelineStage> pipeline_log;

    std::string serialize() const;
};

namespace detail {

inline double lambda_or_zero(const Graph& g) {
    return g.edge_count() == 0 ? 0.0 : perron(g).lambda;
}

}  // namespace detail

// Truncation certificate for a bipartite graph: keep the vertices whose
// Perron entry reaches a quarter of the entry at the eps^2 mass prefix.
inline StabilityCertificate biclique_certificate(
    const Graph& g, double eps,
    const std::optional<VertexPartition>& declared = std::nullopt,
    double delta_override = -1.0) {
    if (!(eps > 0.0 && eps < 0.01))
        throw Error("biclique_certificate requires eps in (0, 0.01)");
    if (g.edge_count() == 0) throw Error("biclique_certificate requires m >= 1");
    VertexPartition partition;
    if (declared) {
        if (!is_bipartite_across(g, *declared))
            throw PreconditionError("not bipartite across the declared parts");
        partition = *declared;
    } else {
        auto found = bipartition_of(g);
        if (!found) throw PreconditionError("graph is not bipartite");
        partition = *found;
    }
    const double m = static_cast<double>(g.edge_count());
    const double delta = delta_override > 0.0 ? delta_override
                                              : std::pow(eps, 4.0) / 100.0;
    const auto p = perron(g);

    auto truncate = [&](const std::vector<int>& side) {
        // entries descending, ties by vertex index
        std::vector<int> order(side.begin(), side.end());
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            if (p.x[a] != p.x[b]) return p.x[a] > p.x[b];
            return a < b;
        });
        double mass = 0.0;
        double cut = 0.0;
        for (int v : order) {
            mass += p.x[v] * p.x[v];
            cut = p.x[v];
            if (mass >= eps * eps) break;
        }
        std::vector<int> kept;
        for (int v : side)
            if (p.x[v] >= cut / 4.0 && p.x[v] > 0.0) kept.push_back(v);
        return kept;
    };

    StabilityCertificate cert;
    cert.kind = StabilityCertificate::Kind::biclique;
    cert.parts = VertexPartition({truncate(partition.parts[0]),
                                  truncate(partition.parts[1])});
    auto [count, delta_edges] =
        biclique_distance(g, cert.parts.parts[0], cert.parts.parts[1]);
    cert.edit_count = count;
    cert.edit_fraction = static_cast<double>(count) / m;
    cert.delta_used = delta;
    cert.eps_target = eps;
    cert.hypothesis_met = p.lambda >= (1.0 - delta) * std::sqrt(m) - 1e-8;
    cert.pipeline_log.push_back(
        {"biclique_truncation", 0, p.lambda, p.lambda});
    return cert;
}

// ---------------------------------------------------------------------------
// partition search (the template-fitting step the certificates end with)

enum class SearchMode { exact, local };

namespace detail {

// cost of a full assignment of C into parts: intra-part edges + edges leaving
// C + missing cross pairs
inline std::size_t partition_cost(const Graph& g, const std::vector<int>& c,
                                  const std::vector<int>& part_of_c,
                                  int parts) {
    std::vector<std::vector<int>> groups(parts);
    for (std::size_t i = 0; i < c.size(); ++i)
        groups[part_of_c[i]].push_back(c[i]);
    return edit_distance_template(g, VertexPartition(groups), false).first;
}

struct ExactPartitionSearch {
    const Graph& g;
    const std::vector<int>& c;  // sorted
    int parts;
    std::vector<int> cap;       // size cap per part (balanced profile)
    std::vector<int> assign;    // vertex index in c -> part
    std::vector<int> size;
    std::vector<std::vector<int>> members;  // current part members (indices in c)
    std::size_t base;           // edges leaving C: fixed cost
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    std::vector<int> best_assign;

    void run() {
        assign.assign(c.size(), -1);
        size.assign(parts, 0);
        members.assign(parts, {});
        descend(0, 0, 0);
    }

    void descend(std::size_t idx, int opened, std::size_t cost) {
        if (cost >= best_cost) return;
        if (idx == c.size()) {
            best_cost = cost;
            best_assign = assign;
            return;
        }
        const int v = c[idx];
        // first-use ordering of parts kills permutation symmetry
        const int limit = std::min(opened + 1, parts);
        for (int p = 0; p < limit; ++p) {
            if (size[p] >= cap[p]) continue;
            std::size_t extra = 0;
            for (int q = 0; q < parts; ++q) {
                for (int widx : members[q]) {
                    const bool adjacent = g.has_edge(v, c[widx]);
                    if (q == p && adjacent) ++extra;        // intra-part edge
                    if (q != p && !adjacent) ++extra;       // missing cross pair
                }
            }
            assign[idx] = p;
            size[p]++;
            members[p].push_back(static_cast<int>(idx));
            descend(idx + 1, std::max(opened, p + 1), cost + extra);
            members[p].pop_back();
            size[p]--;
            assign[idx] = -1;
        }
    }
};

}  // namespace detail

// Best balanced partition of C into at most r parts minimizing the template
// deviation. Exact mode enumerates assignments (|C| <= 14); local mode runs
// swap-based refinement from seeded starts and reports an upper bound.
inline std::pair<VertexPartition, std::size_t>
partition_search(const Graph& g, const std::vector<int>& c_in, int r,
                 SearchMode mode, std::uint64_t seed = 0) {
    if (r < 1) throw Error("partition_search requires r >= 1");
    std::vector<int> c = c_in;
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    if (c.empty()) {
        VertexPartition empty;
        return {empty, edit_distance_template(g, empty, false).first};
    }
    const int parts_max = std::min<int>(r, static_cast<int>(c.size()));

    // fixed cost: edges with an endpoint outside C
    std::vector<char> in_c(g.vertex_count(), 0);
    for (int v : c) in_c[v] = 1;
    std::size_t base = 0;
    for (const Edge& e : g.edges())
        if (!in_c[e.u] || !in_c[e.v]) ++base;

    auto balanced_caps = [&](int parts) {
        std::vector<int> cap(parts, static_cast<int>(c.size()) / parts);
        for (std::size_t i = 0; i < c.size() % parts; ++i) cap[i]++;
        return cap;
    };

    VertexPartition best_partition;
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();

    if (mode == SearchMode::exact) {
        if (c.size() > 14) throw Error("partition_search exact mode caps |C| at 14");
        for (int parts = 1; parts <= parts_max; ++parts) {
            detail::ExactPartitionSearch search{g, c, parts, balanced_caps(parts),
                                                {}, {}, {}, base};
            search.run();
            const std::size_t cost = search.best_cost + base;
            if (cost < best_cost) {
                std::vector<std::vector<int>> groups(parts);
                for (std::size_t i = 0; i < c.size(); ++i)
                    groups[search.best_assign[i]].push_back(c[i]);
                best_partition = VertexPartition(groups);
                best_cost = cost;
            }
        }
        return {best_partition, best_cost};
    }

    // local mode
    const int n_c = static_cast<int>(c.size());
    auto cost_of = [&](const std::vector<int>& part_of) {
        std::vector<std::vector<int>> groups(parts_max);
        for (int i = 0; i < n_c; ++i) groups[part_of[i]].push_back(c[i]);
        groups.erase(std::remove_if(groups.begin(), groups.end(),
                                    [](const auto& gp) { return gp.empty(); }),
                     groups.end());
        return edit_distance_template(g, VertexPartition(groups), false).first;
    };

    auto refine = [&](std::vector<int> part_of) {
        std::size_t cost = cost_of(part_of);
        bool improved = true;
        int guard = 0;
        while (improved && guard++ < 200) {
            improved = false;
            // single moves preserving the balanced size profile
            std::vector<int> size(parts_max, 0);
            for (int i = 0; i < n_c; ++i) size[part_of[i]]++;
            const int lo = *std::min_element(size.begin(), size.end());
            for (int i = 0; i < n_c; ++i) {
                if (size[part_of[i]] <= lo) continue;
                for (int p = 0; p < parts_max; ++p) {
                    if (p == part_of[i] || size[p] != lo) continue;
                    auto trial = part_of;
                    trial[i] = p;
                    const std::size_t tc = cost_of(trial);
                    if (tc < cost) {
                        part_of = trial;
                        cost = tc;
                        improved = true;
                        size[trial[i]]++;
                        size[part_of[i]]--;
                    }
                }
            }
            // pair swaps
            for (int i = 0; i < n_c && guard < 200; ++i)
                for (int j = i + 1; j < n_c; ++j) {
                    if (part_of[i] == part_of[j]) continue;
                    auto trial = part_of;
                    std::swap(trial[i], trial[j]);
                    const std::size_t tc = cost_of(trial);
                    if (tc < cost) {
                        part_of = trial;
                        cost = tc;
                        improved = true;
                    }
                }
        }
        return std::make_pair(part_of, cost);
    };

    std::vector<std::vector<int>> starts;
    // greedy-coloring start recovers complete multipartite structure exactly
    {
        std::vector<int> coloring(n_c, -1);
        int classes = 0;
        for (int i = 0; i < n_c; ++i) {
            std::vector<char> taken(n_c, 0);
            for (int j = 0; j < n_c; ++j)
                if (coloring[j] >= 0 && g.has_edge(c[i], c[j])) taken[coloring[j]] = 1;
            int col = 0;
            while (taken[col]) ++col;
            coloring[i] = col;
            classes = std::max(classes, col + 1);
        }
        // fold extra classes into the allowed range, then rebalance
        for (auto& col : coloring)
            if (col >= parts_max) col = col % parts_max;
        const auto caps = balanced_caps(parts_max);
        std::vector<int> size(parts_max, 0);
        for (int col : coloring) size[col]++;
        for (int i = 0; i < n_c; ++i) {
            while (size[coloring[i]] > caps[coloring[i]]) {
                int tgt = 0;
                for (int p = 0; p < parts_max; ++p)
                    if (size[p] < caps[p]) { tgt = p; break; }
                size[coloring[i]]--;
                coloring[i] = tgt;
                size[tgt]++;
            }
        }
        starts.push_back(coloring);
    }
    SplitMix64 rng(seed);
    for (int s = 0; s < 16; ++s) {
        std::vector<int> idx(n_c);
        for (int i = 0; i < n_c; ++i) idx[i] = i;
        // seeded Fisher-Yates
        for (int i = n_c - 1; i > 0; --i)
            std::swap(idx[i], idx[rng.next_below(static_cast<std::uint64_t>(i + 1))]);
        const auto caps = balanced_caps(parts_max);
        std::vector<int> part_of(n_c);
        int p = 0, used = 0;
        for (int i = 0; i < n_c; ++i) {
            if (used == caps[p]) { ++p; used = 0; }
            part_of[idx[i]] = p;
            ++used;
        }
        starts.push_back(part_of);
    }
    for (const auto& start : starts) {
        auto [part_of, cost] = refine(start);
        if (cost < best_cost) {
            std::vector<std::vector<int>> groups(parts_max);
            for (int i = 0; i < n_c; ++i) groups[part_of[i]].push_back(c[i]);
            groups.erase(std::remove_if(groups.begin(), groups.end(),
                                        [](const auto& gp) { return gp.empty(); }),
                         groups.end());
            best_partition = VertexPartition(groups);
            best_cost = cost;
        }
    }
    return {best_partition, best_cost};
}

}  // namespace specturan
