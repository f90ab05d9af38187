#include "graphex/estimators.hpp"

#include <algorithm>
#include <cmath>

#include "graphex/error.hpp"

namespace graphex {

namespace {

// p * sum over the histogram of (1 - (1-p)^k), skipping k = 0.
double smoothed_count(const DegreeSummary& summary, double p) {
    if (p == 1.0) {
        double n = 0.0;
        for (const auto& [k, count] : summary.counts)
            if (k > 0) n += static_cast<double>(count);
        return n;
    }
    double total = 0.0;
    for (const auto& [k, count] : summary.counts) {
        if (k == 0) continue;
        total += static_cast<double>(count) * (1.0 - pow_by_squaring(1.0 - p, k));
    }
    return p * total;
}

}  // namespace

double pow_by_squaring(double base, std::size_t k) {
    double result = 1.0;
    while (k > 0) {
        if (k & 1U) result *= base;
        base *= base;
        k >>= 1U;
    }
    return result;
}

double count_N_p(const UndirectedGraph& graph, double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("p must lie in [0,1]");
    return smoothed_count(degree_summary(graph, false), p);
}

EstimateReport estimate_sigma_nsvr(const UndirectedGraph& graph, double p, bool clamp) {
    if (!(p > 0.0 && p < 1.0)) throw DomainError("p must lie in (0,1)");
    const DegreeSummary summary = degree_summary(graph, false);
    EstimateReport r;
    r.p = p;
    r.n1 = smoothed_count(summary, 1.0);
    r.np = smoothed_count(summary, p);
    r.v_count = graph.vertex_count();
    r.e_count = graph.edge_count();
    r.self_loop_count = graph.self_loop_count();
    r.sigma_hat = r.np >= 1.0 ? (std::log(r.n1) - std::log(r.np)) / -std::log(p) - 1.0 : 0.0;
    if (clamp) {
        r.clamped = true;
        r.sigma_clamped = std::clamp(r.sigma_hat, 0.0, 1.0);
    }
    return r;
}

double estimate_sigma_cr(std::size_t v_count, std::size_t e_count) {
    if (v_count < 1) throw DomainError("CR estimator needs at least one vertex");
    if (e_count <= 1) throw UndefinedEstimate("CR estimator needs at least two edges");
    return 2.0 * std::log(static_cast<double>(v_count)) / std::log(static_cast<double>(e_count)) - 1.0;
}

double estimate_sigma_cr(const UndirectedGraph& graph) {
    return estimate_sigma_cr(graph.vertex_count(), graph.edge_count());
}

EstimateReport estimate_sigma_bipartite(const BipartiteGraph& graph, bool uncorrected) {
    if (graph.left_count() == 0) throw DomainError("bipartite estimator needs a non-empty left part");
    const DegreeSummary summary = graph.left_degree_summary();
    EstimateReport r;
    r.p = 0.5;
    r.v_count = graph.left_count();
    r.e_count = graph.edge_count();
    r.n1 = static_cast<double>(r.v_count);
    r.np = smoothed_count(summary, 0.5);
    if (r.np >= 1.0) {
        r.sigma_hat = (std::log(r.n1) - std::log(r.np)) / std::log(2.0);
        if (!uncorrected) r.sigma_hat -= 1.0;
    }
    return r;
}

}  // namespace graphex
