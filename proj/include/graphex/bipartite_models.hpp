#ifndef GRAPHEX_BIPARTITE_MODELS_HPP
#define GRAPHEX_BIPARTITE_MODELS_HPP

#include <optional>
#include <string>
#include <string_view>

#include "graphex/models.hpp"

namespace graphex {

/// Mirrored bipartite versions of the dense, separable and GGP families with
/// independent left (v) and right (w) tail-indices.
enum class BipartiteKind { Dense, SparseSeparable, Ggp };

struct BipartiteModelSpec {
    BipartiteKind kind = BipartiteKind::Dense;
    double sigma_v = 0.0;
    double sigma_w = 0.0;
    /// int int W rho psi, checked finite at construction.
    double edge_density = 0.0;

    std::string key() const;
    bool operator==(const BipartiteModelSpec&) const = default;
};

/// Validates sigma ranges and computes edge_density by quadrature.
BipartiteModelSpec make_bipartite_model(BipartiteKind kind, double sigma_v = 0.0, double sigma_w = 0.0);

/// Keys: `dense`, `sparse-sep`, `ggp`.
BipartiteModelSpec parse_bipartite_model(std::string_view key, std::optional<double> sigma_v,
                                         std::optional<double> sigma_w);

double bipartite_graphon(const BipartiteModelSpec& model, double x, double y);
double left_density(const BipartiteModelSpec& model, double x);
double right_density(const BipartiteModelSpec& model, double y);

/// mu_v(x) = int W(x,y) psi(dy).
double eval_mu_v(const BipartiteModelSpec& model, double x);
/// mu_w(y) = int W(x,y) rho(dx).
double eval_mu_w(const BipartiteModelSpec& model, double y);
/// nu_v(x,x') = int W(x,y) W(x',y) psi(dy).
double eval_nu_v(const BipartiteModelSpec& model, double x, double xp);

/// Constant limit of z^sigma_v F_v(z) as z -> 0.
double slowly_varying_limit_v(const BipartiteModelSpec& model);

struct BipartiteWindow {
    LatentWindow left;
    LatentWindow right;
};

/// Windows such that s*alpha*int_out mu_v rho + s*alpha*int_out mu_w psi <= budget.
BipartiteWindow bipartite_truncation_bounds(const BipartiteModelSpec& model, double s, double alpha,
                                            double budget);

}  // namespace graphex

#endif  // GRAPHEX_BIPARTITE_MODELS_HPP
