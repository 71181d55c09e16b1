#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "specturan/counting.hpp"
#include "specturan/graph.hpp"
#include "specturan/rng.hpp"
#include "specturan/spectral.hpp"
#include "specturan/walks.hpp"

namespace specturan {

struct Tolerances {
    double numeric = 1e-8;   // holds <=> slack >= -numeric
    double equality = 1e-6;  // equality flag <=> |slack| <= equality
};

// One inequality instance. All constants that went into the check, including
// the tolerances, are recorded in params.
struct BoundReport {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;  // rhs - lhs
    bool holds = false;
    bool equality = false;
    bool hypothesis_met = true;
    std::map<std::string, double> params;

    static BoundReport make(std::string name, double lhs, double rhs,
                            const Tolerances& tol,
                            std::map<std::string, double> params) {
        BoundReport r;
        r.name = std::move(name);
        r.lhs = lhs;
        r.rhs = rhs;
        r.slack = rhs - lhs;
        r.holds = r.slack >= -tol.numeric;
        r.equality = std::abs(r.slack) <= tol.equality;
        r.params = std::move(params);
        r.params["numeric_tol"] = tol.numeric;
        r.params["equality_tol"] = tol.equality;
        return r;
    }
};

namespace detail {

inline void require_clique_free(const Graph& g, int r, const char* who) {
    const auto witness = find_subgraph(g, gen_complete(r + 1));
    if (witness)
        throw PreconditionError(std::string(who) + ": graph contains K_" +
                                    std::to_string(r + 1),
                                *witness);
}

}  // namespace detail

// lambda(G) <= sqrt((1 - 1/r) 2m) for K_{r+1}-free G.
inline BoundReport check_nikiforov_edge(const Graph& g, int r, Tolerances tol = {}) {
    if (r < 2) throw Error("check_nikiforov_edge requires r >= 2");
    detail::require_clique_free(g, r, "check_nikiforov_edge");
    const double m = static_cast<double>(g.edge_count());
    const auto p = perron(g);
    const double rhs = std::sqrt((1.0 - 1.0 / r) * 2.0 * m);
    return BoundReport::make("nikiforov_edge", p.lambda, rhs, tol,
                             {{"r", static_cast<double>(r)}, {"m", m}});
}

// lambda^2(G) <= (1 - 1/r + eps) 2m for F-free G, chi(F) = r + 1 >= 3.
// eps instantiates the vanishing term and is swept by the harness.
inline BoundReport check_edge_spectral_ess(const Graph& g, const Graph& f,
                                           double eps, Tolerances tol = {}) {
    const int chi = chromatic_number(f);
    if (chi < 3)
        throw Error("check_edge_spectral_ess: bipartite forbidden graph rejected");
    const int r = chi - 1;
    const auto witness = find_subgraph(g, f);
    if (witness)
        throw PreconditionError("check_edge_spectral_ess: graph is not F-free",
                                *witness);
    const double m = static_cast<double>(g.edge_count());
    const auto p = perron(g);
    const double rhs = (1.0 - 1.0 / r + eps) * 2.0 * m;
    return BoundReport::make("edge_spectral_ess", p.lambda * p.lambda, rhs, tol,
                             {{"r", static_cast<double>(r)},
                              {"eps", eps},
                              {"m", m}});
}

// lambda^ell(G) <= (1 - 1/r + eps) w_ell(G). With eps = 0 this is the
// K_{r+1}-free walk bound (checked here); with eps > 0 the caller vouches
// for F-freeness of g.
inline BoundReport check_walk_bound(const Graph& g, int r, int ell, double eps,
                                    Tolerances tol = {}) {
    if (r < 2) throw Error("check_walk_bound requires r >= 2");
    if (ell < 1 || ell > 8) throw Error("check_walk_bound requires 1 <= ell <= 8");
    if (eps == 0.0) detail::require_clique_free(g, r, "check_walk_bound");
    const auto w = walk_table(g, ell);
    const auto p = perron(g);
    const double rhs = (1.0 - 1.0 / r + eps) * walk_count_to_double(w.total);
    return BoundReport::make("walk_bound", std::pow(p.lambda, ell), rhs, tol,
                             {{"r", static_cast<double>(r)},
                              {"ell", static_cast<double>(ell)},
                              {"eps", eps},
                              {"w_ell", walk_count_to_double(w.total)}});
}

// lambda(G) <= (sqrt(8m + 1) - 1) / 2, tight on complete graphs.
inline BoundReport check_stanley(const Graph& g, Tolerances tol = {}) {
    if (g.edge_count() == 0) throw Error("check_stanley requires m >= 1");
    const double m = static_cast<double>(g.edge_count());
    const auto p = perron(g);
    const double rhs = 0.5 * (std::sqrt(8.0 * m + 1.0) - 1.0);
    return BoundReport::make("stanley", p.lambda, rhs, tol, {{"m", m}});
}

// lambda^ell <= sum_{i=2}^{ell} (i-1) k_i lambda^{ell-i} for K_{ell+1}-free G.
inline BoundReport check_clique_poly(const Graph& g, int ell, Tolerances tol = {}) {
    if (ell < 2 || ell > 8) throw Error("check_clique_poly requires 2 <= ell <= 8");
    detail::require_clique_free(g, ell, "check_clique_poly");
    const auto p = perron(g);
    const auto prof = clique_profile(g, ell);
    double rhs = 0.0;
    for (int i = 2; i <= ell; ++i)
        rhs += (i - 1) * static_cast<double>(prof.k(i)) *
               std::pow(p.lambda, ell - i);
    return BoundReport::make("clique_poly", std::pow(p.lambda, ell), rhs, tol,
                             {{"ell", static_cast<double>(ell)},
                              {"m", static_cast<double>(g.edge_count())}});
}

struct SimplexVector {
    std::vector<double> weights;  // nonnegative, sums to 1
};

struct MotzkinStrausResult {
    double value = 0.0;  // sum_{ij in E} w_i w_j at the final iterate
    SimplexVector w;
    int iterations = 0;
    bool monotone = true;  // objective never decreased beyond roundoff
};

// Replicator-dynamics ascent of the quadratic program on the simplex.
// Uniform-plus-jitter start; the objective is nondecreasing per step.
inline MotzkinStrausResult motzkin_straus_opt(const Graph& g, int iters = 2000,
                                              std::uint64_t seed = 0) {
    if (iters < 1) throw Error("motzkin_straus_opt requires iters >= 1");
    const int n = g.vertex_count();
    MotzkinStrausResult res;
    if (n == 0) return res;
    SplitMix64 rng(seed);
    std::vector<double> w(n), aw(n);
    double total = 0.0;
    for (int v = 0; v < n; ++v) {
        w[v] = 1.0 + 0.01 * rng.next_double();
        total += w[v];
    }
    for (auto& c : w) c /= total;
    const auto edges = g.edges();
    auto objective = [&](const std::vector<double>& vec) {
        double s = 0.0;
        for (const Edge& e : edges) s += vec[e.u] * vec[e.v];
        return s;
    };
    double prev = -1.0;
    int it = 0;
    for (; it < iters; ++it) {
        std::fill(aw.begin(), aw.end(), 0.0);
        for (const Edge& e : edges) {
            aw[e.u] += w[e.v];
            aw[e.v] += w[e.u];
        }
        double q = 0.0;  // w^T A w = 2 * objective
        for (int v = 0; v < n; ++v) q += w[v] * aw[v];
        if (q <= 0.0) break;  // empty graph or mass stranded off the edges
        const double val = q / 2.0;
        if (prev >= 0.0 && val < prev - 1e-12) res.monotone = false;
        prev = val;
        for (int v = 0; v < n; ++v) w[v] = w[v] * aw[v] / q;
    }
    res.value = objective(w);
    res.w.weights = std::move(w);
    res.iterations = it;
    return res;
}

// sum_{i,j in V} C_{i,j} x_i^2 x_j^2 >= lambda^3 / (2m); lhs is the lower
// bound, rhs the codegree moment, so holds means the sum clears the bound.
inline BoundReport check_codegree_lower(const Graph& g, Tolerances tol = {}) {
    if (g.edge_count() == 0) throw Error("check_codegree_lower requires m >= 1");
    const auto p = perron(g);
    const int n = g.vertex_count();
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        if (p.x[i] == 0.0) continue;
        for (int j = 0; j < n; ++j) {
            if (p.x[j] == 0.0) continue;
            const int c = codegree(g, i, j);
            if (c > 0)
                sum += c * p.x[i] * p.x[i] * p.x[j] * p.x[j];
        }
    }
    const double m = static_cast<double>(g.edge_count());
    const double lhs = p.lambda * p.lambda * p.lambda / (2.0 * m);
    return BoundReport::make("codegree_lower", lhs, sum, tol, {{"m", m}});
}

// K_4-free k_3 stability: if lambda >= (1 - delta) sqrt(4m/3) with
// delta = beta^10, then k_3 >= (1 - beta)(m/3)^{3/2}.
inline BoundReport check_k3_stability(const Graph& g, double beta,
                                      Tolerances tol = {}) {
    if (!(beta > 0.0 && beta < 0.01))
        throw Error("check_k3_stability requires 0 < beta < 0.01");
    detail::require_clique_free(g, 3, "check_k3_stability");
    const double delta = std::pow(beta, 10.0);
    const double m = static_cast<double>(g.edge_count());
    const auto p = perron(g);
    const auto prof = clique_profile(g, 3);
    const double lhs = (1.0 - beta) * std::pow(m / 3.0, 1.5);
    const double k3 = static_cast<double>(prof.k(3));
    auto rep = BoundReport::make("k3_stability", lhs, k3, tol,
                                 {{"beta", beta},
                                  {"delta", delta},
                                  {"lambda", p.lambda},
                                  {"m", m}});
    rep.hypothesis_met =
        p.lambda >= (1.0 - delta) * std::sqrt(4.0 * m / 3.0) - tol.numeric;
    return rep;
}

// Delta(G) <= m/2 + m^0.99 whenever lambda(G) > sqrt(m).
inline BoundReport check_max_degree(const Graph& g, Tolerances tol = {}) {
    if (g.edge_count() == 0) throw Error("check_max_degree requires m >= 1");
    const double m = static_cast<double>(g.edge_count());
    const auto p = perron(g);
    const double rhs = m / 2.0 + std::pow(m, 0.99);
    auto rep = BoundReport::make("max_degree", static_cast<double>(g.max_degree()),
                                 rhs, tol, {{"m", m}, {"lambda", p.lambda}});
    rep.hypothesis_met = p.lambda > std::sqrt(m);
    return rep;
}

// Sos--Straus/Fisher--Ryan chain for a K_{ell+1}-free graph:
// (k_ell / C(ell,ell))^{1/ell} <= ... <= (k_2 / C(ell,2))^{1/2} <= k_1 / ell.
// Terms with k_i = 0 are skipped. Reports the worst adjacent-pair slack.
inline BoundReport check_clique_chain(const Graph& g, int ell, Tolerances tol = {}) {
    if (ell < 2 || ell > 8) throw Error("check_clique_chain requires 2 <= ell <= 8");
    detail::require_clique_free(g, ell, "check_clique_chain");
    const auto prof = clique_profile(g, ell);
    auto binom = [](int a, int b) {
        double r = 1.0;
        for (int i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
        return r;
    };
    std::vector<double> terms;  // increasing i from 1 upward
    for (int i = 1; i <= ell; ++i) {
        if (prof.k(i) == 0) continue;
        terms.push_back(std::pow(static_cast<double>(prof.k(i)) / binom(ell, i),
                                 1.0 / i));
    }
    double worst = std::numeric_limits<double>::infinity();
    double lhs = 0.0, rhs = 0.0;
    bool first = true;
    for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
        const double s = terms[i] - terms[i + 1];  // term_{i+1} <= term_i
        if (first || s < worst) {
            worst = s;
            lhs = terms[i + 1];
            rhs = terms[i];
            first = false;
        }
    }
    if (first) { lhs = 0.0; rhs = 0.0; }  // chain shorter than two terms
    return BoundReport::make("clique_chain", lhs, rhs, tol,
                             {{"ell", static_cast<double>(ell)},
                              {"terms", static_cast<double>(terms.size())}});
}

}  // namespace specturan
