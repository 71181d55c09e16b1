#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "specturan/graph.hpp"

namespace specturan {

struct PerronData {
    double lambda = 0.0;
    std::vector<double> x;   // unit, nonnegative, zero off the chosen component
    double residual = 0.0;   // ||Ax - lambda x||_2
    int iterations = 0;
    int component_id = 0;    // components ordered by smallest vertex
    bool converged = false;
    bool component_tie = false;  // another component matched lambda within tol
};

namespace detail {

// Power iteration on A + I restricted to one component. The shift keeps
// bipartite components (eigenvalues come in +/- pairs) from stalling.
// Start vector = normalized degree vector, never orthogonal to the Perron
// vector of a component with an edge.
struct ComponentEig {
    double lambda;
    std::vector<double> x;  // indexed like comp
    double residual;
    int iterations;
    bool converged;
};

inline ComponentEig power_component(const Graph& g, const std::vector<int>& comp,
                                    double tol, int max_iter) {
    const std::size_t k = comp.size();
    std::vector<int> local(g.vertex_count(), -1);
    for (std::size_t i = 0; i < k; ++i) local[comp[i]] = static_cast<int>(i);

    std::vector<double> x(k), y(k);
    double norm = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        x[i] = static_cast<double>(g.degree(comp[i]));
        norm += x[i] * x[i];
    }
    norm = std::sqrt(norm);
    for (auto& v : x) v /= norm;

    double lambda = 0.0, prev_lambda = 0.0, residual = 0.0;
    int it = 0;
    for (; it < max_iter; ++it) {
        // y = A x (within the component)
        for (std::size_t i = 0; i < k; ++i) {
            double s = 0.0;
            for (int w : g.neighbors(comp[i])) s += x[local[w]];
            y[i] = s;
        }
        lambda = 0.0;
        for (std::size_t i = 0; i < k; ++i) lambda += x[i] * y[i];
        residual = 0.0;
        for (std::size_t i = 0; i < k; ++i) {
            const double r = y[i] - lambda * x[i];
            residual += r * r;
        }
        residual = std::sqrt(residual);
        if (it > 0 && residual <= tol &&
            std::abs(lambda - prev_lambda) <= tol * std::max(1.0, lambda)) {
            ++it;
            break;
        }
        prev_lambda = lambda;
        // next iterate: (A + I) x, normalized
        norm = 0.0;
        for (std::size_t i = 0; i < k; ++i) {
            y[i] += x[i];
            norm += y[i] * y[i];
        }
        norm = std::sqrt(norm);
        for (std::size_t i = 0; i < k; ++i) x[i] = y[i] / norm;
    }
    const bool converged = residual <= tol;
    return {lambda, std::move(x), residual, it, converged};
}

}  // namespace detail

// Perron--Frobenius data of the component with the largest spectral radius.
// Deterministic given (g, tol, max_iter); ties between components go to the
// one containing the smallest vertex and are flagged.
inline PerronData perron(const Graph& g, double tol = 1e-10, int max_iter = -1) {
    if (g.edge_count() == 0) throw Error("perron requires at least one edge");
    if (tol <= 0) throw Error("perron requires tol > 0");
    if (max_iter < 0) max_iter = 100 * g.vertex_count() + 10000;

    const auto comps = connected_components(g);
    PerronData best;
    best.lambda = -1.0;
    std::vector<detail::ComponentEig> eigs(comps.size());
    for (std::size_t c = 0; c < comps.size(); ++c) {
        if (comps[c].size() == 1) {
            eigs[c] = {0.0, {1.0}, 0.0, 0, true};
            continue;
        }
        eigs[c] = detail::power_component(g, comps[c], tol, max_iter);
    }
    std::size_t best_c = 0;
    for (std::size_t c = 0; c < comps.size(); ++c) {
        if (eigs[c].lambda > eigs[best_c].lambda) best_c = c;
    }
    bool tie = false;
    for (std::size_t c = 0; c < comps.size(); ++c)
        if (c != best_c && std::abs(eigs[c].lambda - eigs[best_c].lambda) <= tol)
            tie = true;

    const auto& e = eigs[best_c];
    PerronData out;
    out.lambda = e.lambda;
    out.x.assign(g.vertex_count(), 0.0);
    for (std::size_t i = 0; i < comps[best_c].size(); ++i) {
        // Perron entries are nonnegative; clip the roundoff dust.
        out.x[comps[best_c][i]] = std::max(0.0, e.x[i]);
    }
    out.residual = e.residual;
    out.iterations = e.iterations;
    out.component_id = static_cast<int>(best_c);
    out.converged = e.converged;
    out.component_tie = tie;
    return out;
}

// Rayleigh quotient 2 sum_{uv in E} v_u v_v / ||v||^2.
inline double rayleigh(const Graph& g, std::span<const double> v) {
    if (static_cast<int>(v.size()) != g.vertex_count())
        throw Error("rayleigh: vector length mismatch");
    double nrm2 = 0.0;
    for (double c : v) nrm2 += c * c;
    if (nrm2 == 0.0) throw Error("rayleigh: zero vector rejected");
    double s = 0.0;
    for (const Edge& e : g.edges()) s += v[e.u] * v[e.v];
    return 2.0 * s / nrm2;
}

// For a bipartite graph the squared eigenvector mass splits evenly across
// the sides; returns both sums so callers can certify the difference.
inline std::pair<double, double>
bipartite_norm_split(const Graph& g, const VertexPartition& partition,
                     const PerronData& p) {
    if (partition.parts.size() != 2)
        throw Error("bipartite_norm_split requires a 2-partition");
    if (!is_bipartite_across(g, partition))
        throw Error("graph is not bipartite across the declared partition");
    std::vector<int> side(g.vertex_count(), -1);
    for (int s = 0; s < 2; ++s)
        for (int v : partition.parts[s]) side.at(v) = s;
    // the partition must cover the support of x
    for (int v = 0; v < g.vertex_count(); ++v)
        if (p.x[v] > 0.0 && side[v] < 0)
            throw Error("partition does not cover the eigenvector support");
    double a = 0.0, b = 0.0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (side[v] == 0) a += p.x[v] * p.x[v];
        if (side[v] == 1) b += p.x[v] * p.x[v];
    }
    return {a, b};
}

}  // namespace specturan
