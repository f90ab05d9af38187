#ifndef GRAPHEX_SAMPLER_HPP
#define GRAPHEX_SAMPLER_HPP

#include <cstdint>

#include "graphex/bipartite_models.hpp"
#include "graphex/graph.hpp"
#include "graphex/models.hpp"
#include "graphex/rng.hpp"

namespace graphex {

/// Default expected number of missed edges per sampled graph.
inline constexpr double kDefaultBudget = 1e-3;

/// Draws G_size from the graphex process of `model`. Latent points live in
/// truncation_bounds(model, size, budget / 2); points in the low-activity
/// "dust" part of that window are generated only when they connect to the
/// explicitly sampled core, and dust-dust edges (expected count <= budget / 2)
/// are not drawn. Latent coordinates are recorded per vertex.
UndirectedGraph sample_unipartite(const ModelSpec& model, double size, double budget, Rng& rng);
UndirectedGraph sample_unipartite(const ModelSpec& model, double size, double budget,
                                  std::uint64_t seed);

/// Bipartite analogue: left points at rate s, right points at rate alpha.
BipartiteGraph sample_bipartite(const BipartiteModelSpec& model, double s, double alpha, double budget,
                                Rng& rng);
BipartiteGraph sample_bipartite(const BipartiteModelSpec& model, double s, double alpha, double budget,
                                std::uint64_t seed);

/// Keeps each vertex with probability r and every edge whose endpoints are
/// all kept; isolated vertices are dropped. Throws DomainError unless
/// 0 <= r <= 1.
UndirectedGraph p_sample(const UndirectedGraph& graph, double r, Rng& rng);
UndirectedGraph p_sample(const UndirectedGraph& graph, double r, std::uint64_t seed);

}  // namespace graphex

#endif  // GRAPHEX_SAMPLER_HPP
