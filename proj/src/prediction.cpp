#include "graphex/prediction.hpp"

#include <cmath>

#include "graphex/error.hpp"

namespace graphex {

double predict_edges(std::size_t v_alpha, std::size_t edges, std::size_t self_loops, double v_beta,
                     double sigma_hat) {
    if (!(sigma_hat > -1.0)) throw DomainError("sigma_hat must exceed -1");
    if (v_alpha == 0) throw DomainError("prediction needs a non-empty observed graph");
    if (!(v_beta > 0.0)) throw DomainError("future vertex count must be positive");
    const double ratio = v_beta / static_cast<double>(v_alpha);
    const double base = static_cast<double>(edges) - static_cast<double>(self_loops);
    if (ratio == 1.0) return base;
    return std::pow(ratio, 2.0 / (1.0 + sigma_hat)) * base;
}

double predict_edges(const UndirectedGraph& graph_at_alpha, double v_beta, double sigma_hat) {
    return predict_edges(graph_at_alpha.vertex_count(), graph_at_alpha.edge_count(),
                         graph_at_alpha.self_loop_count(), v_beta, sigma_hat);
}

double normalized_rmse(std::span<const std::pair<double, double>> pairs) {
    if (pairs.empty()) throw DomainError("normalized_rmse needs at least one pair");
    double sum = 0.0;
    for (const auto& [prediction, truth] : pairs) {
        if (!(truth > 0.0)) throw DomainError("truth must be positive");
        const double rel = (prediction - truth) / truth;
        sum += rel * rel;
    }
    return std::sqrt(sum / static_cast<double>(pairs.size()));
}

}  // namespace graphex
