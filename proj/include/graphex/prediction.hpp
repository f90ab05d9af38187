#ifndef GRAPHEX_PREDICTION_HPP
#define GRAPHEX_PREDICTION_HPP

#include <cstddef>
#include <span>
#include <utility>

#include "graphex/graph.hpp"

namespace graphex {

/// (v_beta / v_alpha)^{2/(1+sigma_hat)} * (edges - self_loops).
/// Throws DomainError when sigma_hat <= -1 or v_alpha == 0.
double predict_edges(std::size_t v_alpha, std::size_t edges, std::size_t self_loops, double v_beta,
                     double sigma_hat);
double predict_edges(const UndirectedGraph& graph_at_alpha, double v_beta, double sigma_hat);

/// sqrt(mean((prediction - truth)^2 / truth^2)). Throws DomainError on an
/// empty list or a nonpositive truth.
double normalized_rmse(std::span<const std::pair<double, double>> pairs);

}  // namespace graphex

#endif  // GRAPHEX_PREDICTION_HPP
