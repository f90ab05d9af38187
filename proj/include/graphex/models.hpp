#ifndef GRAPHEX_MODELS_HPP
#define GRAPHEX_MODELS_HPP

#include <optional>
#include <string>
#include <string_view>

namespace graphex {

/// The canonical graphex families. `GgpCaronFox` is the generalized gamma
/// process in the convention where distinct vertices connect with
/// probability 1 - exp(-2xy) (self-loops 1 - exp(-x^2)).
enum class ModelKind { Dense, AlmostDense, SparseSeparable, SparseNonSeparable, Ggp, GgpCaronFox };

/// Immutable description of one canonical model. Evaluators below are pure
/// functions of it.
struct ModelSpec {
    ModelKind kind = ModelKind::Dense;
    /// True tail-index; 0 for the dense and almost-dense families.
    double sigma = 0.0;
    /// Exponent and constant of the bound nu(x,x') <= C mu(x)^eta mu(x')^eta.
    double eta = 1.0;
    double nu_constant = 1.0;

    std::string key() const;
    bool operator==(const ModelSpec&) const = default;
};

/// Throws DomainError when sigma is outside (0,1) for the power-law families.
ModelSpec make_model(ModelKind kind, double sigma = 0.0);

/// Parses a CLI key (`dense`, `almost-dense`, `sparse-sep`, `sparse-nonsep`,
/// `ggp`, `ggp-cf`). sigma is required for the power-law keys.
ModelSpec parse_model(std::string_view key, std::optional<double> sigma);

std::string_view model_key(ModelKind kind);

/// Connection probability for distinct latent points.
double graphon(const ModelSpec& model, double x, double y);

/// Probability of a self-loop at latent point x.
double self_loop_probability(const ModelSpec& model, double x);

/// Base-measure density rho(x) on [0, inf).
double base_density(const ModelSpec& model, double x);

/// Graphex marginal mu(x) = int W(x,y) rho(dy).
double eval_mu(const ModelSpec& model, double x);

/// Two-point correlation nu(x,y) = int W(x,z) W(z,y) rho(dz). Closed form
/// except for the non-separable family, which integrates numerically.
double eval_nu(const ModelSpec& model, double x, double y);

/// Constant limit of z^sigma F(z) as z -> 0, where F(z) = rho{mu >= z}.
/// Empty for the almost-dense family, whose F is log(1/z).
std::optional<double> slowly_varying_limit(const ModelSpec& model);

struct LatentWindow {
    double lo = 0.0;
    double hi = 0.0;
    bool operator==(const LatentWindow&) const = default;
};

/// Closed-form upper bound on the expected number of edges touching a
/// latent point outside `window`:
///   size^2 * int_out mu rho + size * int_out loop-probability rho.
double omitted_edge_bound(const ModelSpec& model, double size, LatentWindow window);

/// Smallest window whose omitted_edge_bound is <= budget (split evenly
/// between the two ends when both are cut).
LatentWindow truncation_bounds(const ModelSpec& model, double size, double budget);

namespace detail {

/// Smallest x in [lo, hi] with decreasing(x) <= target (bisection on log1p x).
double solve_upper_cut(double target, double lo, double hi, double (*decreasing)(const void*, double),
                       const void* ctx);
/// Largest x in (0, hi] with increasing(x) <= target (bisection on log x).
double solve_lower_cut(double target, double hi, double (*increasing)(const void*, double),
                       const void* ctx);

/// Smallest x on [lo, hi] with f(x) <= target for decreasing f.
template <class F>
double upper_cut(double target, double lo, double hi, const F& f) {
    return solve_upper_cut(
        target, lo, hi, [](const void* c, double x) { return (*static_cast<const F*>(c))(x); }, &f);
}

/// Largest x on (0, hi] with f(x) <= target for increasing f.
template <class F>
double lower_cut(double target, double hi, const F& f) {
    return solve_lower_cut(
        target, hi, [](const void* c, double x) { return (*static_cast<const F*>(c))(x); }, &f);
}

/// Edge rate multiplier of the GGP conventions (1 literal, 2 Caron-Fox).
double ggp_rate(const ModelSpec& model);

bool is_ggp(const ModelSpec& model);

}  // namespace detail

}  // namespace graphex

#endif  // GRAPHEX_MODELS_HPP
