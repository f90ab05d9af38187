#ifndef GRAPHEX_ESTIMATORS_HPP
#define GRAPHEX_ESTIMATORS_HPP

#include <cstddef>
#include <optional>

#include "graphex/graph.hpp"

namespace graphex {

struct EstimateReport {
    double sigma_hat = 0.0;
    /// sigma_hat clipped to [0,1]; set only when clamping was requested.
    std::optional<double> sigma_clamped;
    double n1 = 0.0;
    double np = 0.0;
    double p = 0.5;
    std::size_t v_count = 0;
    std::size_t e_count = 0;
    std::size_t self_loop_count = 0;
    bool clamped = false;
};

/// (1-p)^k by repeated squaring.
double pow_by_squaring(double base, std::size_t k);

/// N_p = p * sum_v (1 - (1-p)^{d*(v)}) with d* the non-self degree; for
/// p = 1 the number of vertices with d* > 0. Throws DomainError unless
/// 0 <= p <= 1.
double count_N_p(const UndirectedGraph& graph, double p);

/// sigma_hat = (log N_1 - log N_p)/(-log p) - 1 when N_p >= 1, else 0.
EstimateReport estimate_sigma_nsvr(const UndirectedGraph& graph, double p = 0.5, bool clamp = false);

/// 2 log|V| / log|E| - 1 from raw counts. Throws UndefinedEstimate when
/// |E| <= 1 and DomainError when |V| < 1.
double estimate_sigma_cr(std::size_t v_count, std::size_t e_count);
double estimate_sigma_cr(const UndirectedGraph& graph);

/// Left-part estimator from M = (1/2) sum_v (1 - 2^{-deg v}):
/// (log|V| - log M)/log 2 - 1, or without the trailing -1 when
/// uncorrected is set. M < 1 gives 0. Throws DomainError on an empty
/// left part.
EstimateReport estimate_sigma_bipartite(const BipartiteGraph& graph, bool uncorrected = false);

}  // namespace graphex

#endif  // GRAPHEX_ESTIMATORS_HPP
