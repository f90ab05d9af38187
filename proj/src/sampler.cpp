#include "graphex/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "graphex/error.hpp"

namespace graphex {

namespace {

using IndexEdge = std::pair<std::uint32_t, std::uint32_t>;
using Fn = std::function<double(double)>;

// Largest expected number of explicitly sampled latent points per side.
constexpr double kMaxCorePoints = 5e7;

void check_core_mean(double mean) {
    if (!std::isfinite(mean)) throw NumericalError("non-finite base-measure mass on the sampling window");
    if (mean > kMaxCorePoints)
        throw NumericalError("sampling window needs about " + std::to_string(mean) +
                             " latent points; reduce the size or raise the budget");
}

// Unnormalised proposal shape on [lo, hi] with closed-form mass and inverse CDF.
struct Envelope {
    enum class Shape { Exponential, ShiftedPower, Power };
    Shape shape = Shape::Exponential;
    double gamma = 0.0;
    double lo = 0.0;
    double hi = 0.0;

    double at(double y) const {
        switch (shape) {
            case Shape::Exponential: return std::exp(-y);
            case Shape::ShiftedPower: return std::pow(1.0 + y, -gamma);
            case Shape::Power: return std::pow(y, -gamma);
        }
        return 0.0;
    }

    double mass() const {
        switch (shape) {
            case Shape::Exponential: return std::exp(-lo) * -std::expm1(lo - hi);
            case Shape::ShiftedPower:
                return (std::pow(1.0 + lo, 1.0 - gamma) - std::pow(1.0 + hi, 1.0 - gamma)) / (gamma - 1.0);
            case Shape::Power:
                return (std::pow(hi, 1.0 - gamma) - std::pow(lo, 1.0 - gamma)) / (1.0 - gamma);
        }
        return 0.0;
    }

    double draw(Rng& rng) const {
        const double u = rng.uniform();
        double y = lo;
        switch (shape) {
            case Shape::Exponential: y = lo - std::log1p(u * std::expm1(lo - hi)); break;
            case Shape::ShiftedPower: {
                const double a = std::pow(1.0 + lo, 1.0 - gamma), b = std::pow(1.0 + hi, 1.0 - gamma);
                y = std::pow(a - u * (a - b), 1.0 / (1.0 - gamma)) - 1.0;
                break;
            }
            case Shape::Power: {
                const double a = std::pow(lo, 1.0 - gamma), b = std::pow(hi, 1.0 - gamma);
                y = std::pow(a + u * (b - a), 1.0 / (1.0 - gamma));
                break;
            }
        }
        return std::clamp(y, lo, hi);
    }
};

// Dust points y connect to a core point x with probability W(y,x), where
// -log(1 - W(y,x)) <= g(y) h(x) and g(y) rho(y) <= scale * envelope(y).
struct DustLaw {
    Envelope envelope;
    double scale = 1.0;
    Fn g;
    Fn g_rho;
};

// One side of the process: where its explicitly sampled core lives and how
// its dust attaches to the opposite core.
struct SideLaw {
    bool ggp = false;
    double sigma = 0.0;
    double core_lo = 0.0;
    double core_hi = 0.0;
    std::optional<DustLaw> dust;
    Fn h;  // dust-bound factor evaluated at this side's core points
};

// Core points in the order along which W is nonincreasing: ascending for
// Lebesgue sides, descending for GGP sides.
std::vector<double> sample_core(const SideLaw& side, double rate, Rng& rng) {
    std::vector<double> xs;
    if (!(side.core_hi > side.core_lo)) return xs;
    if (!side.ggp) {
        const double mean = rate * (side.core_hi - side.core_lo);
        check_core_mean(mean);
        xs.reserve(static_cast<std::size_t>(mean + 4.0 * std::sqrt(mean) + 8.0));
        double x = side.core_lo;
        for (;;) {
            x += rng.exponential() / rate;
            if (x >= side.core_hi) break;
            xs.push_back(x);
        }
        return xs;
    }
    // Levy tail of the envelope x^{-1-s}/Gamma(1-s): T(x) = x^{-s}/(s Gamma(1-s)).
    const double s = side.sigma;
    const double c = s * std::tgamma(1.0 - s) / rate;
    const double floor_mass = std::pow(side.core_lo, -s) / c;
    check_core_mean(floor_mass);
    xs.reserve(static_cast<std::size_t>(floor_mass * 1.05 + 16.0));
    double t = std::pow(side.core_hi, -s) / c;
    for (;;) {
        t += rng.exponential();
        const double x = std::pow(c * t, -1.0 / s);
        if (x < side.core_lo) break;
        if (rng.uniform() < std::exp(-x)) xs.push_back(x);
    }
    return xs;
}

// Geometric-skip Bernoulli draws over positions [begin, end) whose success
// probabilities w(j) are nonincreasing in j.
template <class W>
void thin_row(Rng& rng, std::size_t begin, std::size_t end, const W& w, std::vector<std::uint32_t>& hits) {
    std::size_t j = begin;
    if (j >= end) return;
    double q = w(j);
    while (j < end && q > 0.0) {
        if (q < 1.0) {
            const double skip = std::floor(std::log(rng.uniform_pos()) / std::log1p(-q));
            if (skip >= static_cast<double>(end - j)) break;
            j += static_cast<std::size_t>(skip);
        }
        const double p = w(j);
        if (rng.uniform() * q < p) hits.push_back(static_cast<std::uint32_t>(j));
        q = p;
        ++j;
    }
}

// Draws the dust points of one side that attach to `core` (the opposite
// core, or the same side's core for unipartite graphs). Emits each kept dust
// coordinate and its (dust index, core index) edges.
template <class W>
void sample_dust(const DustLaw& law, const SideLaw& core_side, std::span<const double> core, double rate,
                 const W& weight, Rng& rng, std::vector<double>& dust_xs, std::vector<IndexEdge>& edges) {
    if (core.empty()) return;
    std::vector<double> h(core.size()), cum(core.size() + 1, 0.0);
    for (std::size_t j = 0; j < core.size(); ++j) {
        h[j] = core_side.h(core[j]);
        cum[j + 1] = cum[j] + h[j];
    }
    const double total = cum.back();
    if (!(total > 0.0)) return;
    const double mean = rate * total * law.scale * law.envelope.mass();
    if (!std::isfinite(mean)) throw NumericalError("non-finite dust proposal mass");
    const std::uint64_t proposals = rng.poisson(mean);

    std::vector<std::uint32_t> picks;
    for (std::uint64_t k = 0; k < proposals; ++k) {
        const double y = law.envelope.draw(rng);
        const double gy = law.g(y);
        const double lam = gy * total;
        const double active = lam > 0.0 ? -std::expm1(-lam) / lam : 1.0;
        const double accept = law.g_rho(y) / (law.scale * law.envelope.at(y)) * active;
        if (!(rng.uniform() < accept)) continue;

        const std::uint64_t n = rng.zero_truncated_poisson(lam);
        picks.clear();
        for (std::uint64_t m = 0; m < n; ++m) {
            const double u = rng.uniform() * total;
            auto it = std::upper_bound(cum.begin() + 1, cum.end(), u);
            const auto j = static_cast<std::uint32_t>(std::min<std::ptrdiff_t>(
                it - cum.begin() - 1, static_cast<std::ptrdiff_t>(core.size()) - 1));
            picks.push_back(j);
        }
        std::sort(picks.begin(), picks.end());
        picks.erase(std::unique(picks.begin(), picks.end()), picks.end());

        const auto index = static_cast<std::uint32_t>(dust_xs.size());
        bool kept = false;
        for (const std::uint32_t j : picks) {
            const double cap = -std::expm1(-gy * h[j]);
            if (rng.uniform() * cap < weight(y, core[j])) {
                edges.emplace_back(index, j);
                kept = true;
            }
        }
        if (kept) dust_xs.push_back(y);
    }
}

// ---- unipartite laws -----------------------------------------------------

SideLaw unipartite_law(const ModelSpec& model, double size, double budget, LatentWindow window) {
    SideLaw side;
    const double s = model.sigma;
    const double half = 0.5 * budget;
    side.core_lo = window.lo;
    side.core_hi = window.hi;
    switch (model.kind) {
        case ModelKind::Dense: return side;
        case ModelKind::AlmostDense: {
            const double xd = detail::upper_cut(half, 0.0, 1e300, [&](double x) {
                return 0.5 * (size * size + size) * std::exp(-2.0 * x);
            });
            side.h = [](double x) { return std::exp(-x); };
            if (xd >= window.hi) return side;
            side.core_hi = xd;
            const double c = 1.0 / -std::expm1(-xd);
            DustLaw d;
            d.envelope = {Envelope::Shape::Exponential, 0.0, xd, window.hi};
            d.scale = c;
            d.g = [c](double y) { return c * std::exp(-y); };
            d.g_rho = d.g;
            side.dust = d;
            return side;
        }
        case ModelKind::SparseSeparable: {
            const double xd = detail::upper_cut(half, 0.0, 1e300, [&](double x) {
                const double m = std::pow(1.0 + x, 1.0 - 1.0 / s) * s / (1.0 - s);
                return 0.5 * size * size * m * m + size * std::pow(1.0 + x, 1.0 - 2.0 / s) * s / (2.0 - s);
            });
            side.h = [s](double x) { return std::pow(1.0 + x, -1.0 / s); };
            if (xd >= window.hi) return side;
            side.core_hi = xd;
            const double c = 1.0 / -std::expm1(-std::log1p(xd) / s);
            DustLaw d;
            d.envelope = {Envelope::Shape::ShiftedPower, 1.0 / s, xd, window.hi};
            d.scale = c;
            d.g = [c, s](double y) { return c * std::pow(1.0 + y, -1.0 / s); };
            d.g_rho = d.g;
            side.dust = d;
            return side;
        }
        case ModelKind::SparseNonSeparable: {
            const double a = 1.0 / s + 1.0;
            const double xd = detail::upper_cut(half, 0.0, 1e300, [&](double x) {
                return 0.5 * size * size * std::pow(1.0 + 2.0 * x, 2.0 - a) / ((a - 1.0) * (a - 2.0)) +
                       size * std::pow(1.0 + 2.0 * x, 1.0 - a) / (2.0 * (a - 1.0));
            });
            side.h = [a](double x) { return std::pow(1.0 + x, -0.5 * a); };
            if (xd >= window.hi) return side;
            side.core_hi = xd;
            const double c = 1.0 / -std::expm1(-a * std::log1p(xd));
            DustLaw d;
            d.envelope = {Envelope::Shape::ShiftedPower, 0.5 * a, xd, window.hi};
            d.scale = c;
            d.g = [c, a](double y) { return c * std::pow(1.0 + y, -0.5 * a); };
            d.g_rho = d.g;
            side.dust = d;
            return side;
        }
        case ModelKind::Ggp:
        case ModelKind::GgpCaronFox: {
            side.ggp = true;
            side.sigma = s;
            const double kappa = detail::ggp_rate(model);
            const double gam = std::tgamma(1.0 - s);
            const double eps = detail::lower_cut(half, window.hi, [&](double x) {
                const double m = std::pow(x, 1.0 - s) / ((1.0 - s) * gam);
                return 0.5 * size * size * kappa * m * m + size * std::pow(x, 2.0 - s) / ((2.0 - s) * gam);
            });
            side.h = [](double x) { return x; };
            if (eps <= window.lo) return side;
            side.core_lo = eps;
            DustLaw d;
            d.envelope = {Envelope::Shape::Power, s, window.lo, eps};
            d.scale = kappa / gam;
            d.g = [kappa](double y) { return kappa * y; };
            d.g_rho = [kappa, s, gam](double y) { return kappa * std::exp(-s * std::log(y) - y) / gam; };
            side.dust = d;
            return side;
        }
    }
    return side;
}

// ---- bipartite laws ------------------------------------------------------

// `own`/`other` are the tail indices of this side and the opposite side;
// `dust_mass` is this side's share of the dust-dust budget.
SideLaw bipartite_side(const BipartiteModelSpec& model, double own, double other, LatentWindow window,
                       double dust_mass) {
    SideLaw side;
    side.core_lo = window.lo;
    side.core_hi = window.hi;
    switch (model.kind) {
        case BipartiteKind::Dense: return side;
        case BipartiteKind::SparseSeparable: {
            (void)other;
            const double xd = detail::upper_cut(dust_mass, 0.0, 1e300, [&](double x) {
                return std::pow(1.0 + x, 1.0 - 1.0 / own) * own / (1.0 - own);
            });
            side.h = [own](double x) { return std::pow(1.0 + x, -1.0 / own); };
            if (xd >= window.hi) return side;
            side.core_hi = xd;
            const double c = 1.0 / -std::expm1(-std::log1p(xd) / own);
            DustLaw d;
            d.envelope = {Envelope::Shape::ShiftedPower, 1.0 / own, xd, window.hi};
            d.scale = c;
            d.g = [c, own](double y) { return c * std::pow(1.0 + y, -1.0 / own); };
            d.g_rho = d.g;
            side.dust = d;
            return side;
        }
        case BipartiteKind::Ggp: {
            side.ggp = true;
            side.sigma = own;
            const double gam = std::tgamma(1.0 - own);
            const double eps = detail::lower_cut(dust_mass, window.hi, [&](double x) {
                return std::pow(x, 1.0 - own) / ((1.0 - own) * gam);
            });
            side.h = [](double x) { return x; };
            if (eps <= window.lo) return side;
            side.core_lo = eps;
            DustLaw d;
            d.envelope = {Envelope::Shape::Power, own, window.lo, eps};
            d.scale = 1.0 / gam;
            d.g = [](double y) { return y; };
            d.g_rho = [own, gam](double y) { return std::exp(-own * std::log(y) - y) / gam; };
            side.dust = d;
            return side;
        }
    }
    return side;
}

void check_size(double size, double budget) {
    if (!(size > 0.0) || !std::isfinite(size)) throw DomainError("size must be positive and finite");
    if (!(budget > 0.0)) throw DomainError("budget must be positive");
}

std::vector<VertexId> sequential_ids(std::size_t n) {
    std::vector<VertexId> ids(n);
    for (std::size_t i = 0; i < n; ++i) ids[i] = i;
    return ids;
}

}  // namespace

UndirectedGraph sample_unipartite(const ModelSpec& model, double size, double budget, Rng& rng) {
    check_size(size, budget);
    const LatentWindow window = truncation_bounds(model, size, 0.5 * budget);
    const SideLaw side = unipartite_law(model, size, budget, window);

    std::vector<double> xs = sample_core(side, size, rng);
    const std::size_t core = xs.size();
    std::vector<IndexEdge> edges;
    std::vector<std::uint32_t> hits;
    for (std::size_t i = 0; i < core; ++i) {
        const double xi = xs[i];
        if (rng.uniform() < self_loop_probability(model, xi))
            edges.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i));
        hits.clear();
        thin_row(rng, i + 1, core, [&](std::size_t j) { return graphon(model, xi, xs[j]); }, hits);
        for (const std::uint32_t j : hits) edges.emplace_back(static_cast<std::uint32_t>(i), j);
    }

    if (side.dust) {
        std::vector<double> dust;
        std::vector<IndexEdge> dust_edges;
        sample_dust(*side.dust, side, std::span<const double>(xs.data(), core), size,
                    [&](double y, double x) { return graphon(model, y, x); }, rng, dust, dust_edges);
        for (const auto& [d, j] : dust_edges)
            edges.emplace_back(j, static_cast<std::uint32_t>(core + d));
        xs.insert(xs.end(), dust.begin(), dust.end());
    }
    const auto ids = sequential_ids(xs.size());
    return UndirectedGraph::from_indexed(ids, std::move(edges), xs);
}

UndirectedGraph sample_unipartite(const ModelSpec& model, double size, double budget, std::uint64_t seed) {
    Rng rng(seed);
    return sample_unipartite(model, size, budget, rng);
}

BipartiteGraph sample_bipartite(const BipartiteModelSpec& model, double s, double alpha, double budget,
                                Rng& rng) {
    check_size(s, budget);
    check_size(alpha, budget);
    const BipartiteWindow window = bipartite_truncation_bounds(model, s, alpha, 0.5 * budget);
    // Dust-dust edges are at most s*alpha*m_v*m_w; split the product so the
    // side with more points gets the coarser cut.
    const double product = 0.5 * budget / (s * alpha);
    const double tilt = std::sqrt(s / alpha);
    const SideLaw left =
        bipartite_side(model, model.sigma_v, model.sigma_w, window.left, std::sqrt(product) * tilt);
    const SideLaw right =
        bipartite_side(model, model.sigma_w, model.sigma_v, window.right, std::sqrt(product) / tilt);

    std::vector<double> xs = sample_core(left, s, rng);
    std::vector<double> ys = sample_core(right, alpha, rng);
    const std::size_t left_core = xs.size(), right_core = ys.size();

    std::vector<IndexEdge> edges;
    std::vector<std::uint32_t> hits;
    for (std::size_t i = 0; i < left_core; ++i) {
        const double xi = xs[i];
        hits.clear();
        thin_row(rng, 0, right_core, [&](std::size_t j) { return bipartite_graphon(model, xi, ys[j]); },
                 hits);
        for (const std::uint32_t j : hits) edges.emplace_back(static_cast<std::uint32_t>(i), j);
    }

    std::vector<double> left_dust, right_dust;
    std::vector<IndexEdge> dust_edges;
    if (left.dust) {
        sample_dust(*left.dust, right, std::span<const double>(ys.data(), right_core), s,
                    [&](double y, double x) { return bipartite_graphon(model, y, x); }, rng, left_dust,
                    dust_edges);
        for (const auto& [d, j] : dust_edges) edges.emplace_back(static_cast<std::uint32_t>(left_core + d), j);
    }
    if (right.dust) {
        dust_edges.clear();
        sample_dust(*right.dust, left, std::span<const double>(xs.data(), left_core), alpha,
                    [&](double y, double x) { return bipartite_graphon(model, x, y); }, rng, right_dust,
                    dust_edges);
        for (const auto& [d, i] : dust_edges) edges.emplace_back(i, static_cast<std::uint32_t>(right_core + d));
    }
    const auto left_ids = sequential_ids(left_core + left_dust.size());
    const auto right_ids = sequential_ids(right_core + right_dust.size());
    return BipartiteGraph::from_indexed(left_ids, right_ids, std::move(edges));
}

BipartiteGraph sample_bipartite(const BipartiteModelSpec& model, double s, double alpha, double budget,
                                std::uint64_t seed) {
    Rng rng(seed);
    return sample_bipartite(model, s, alpha, budget, rng);
}

UndirectedGraph p_sample(const UndirectedGraph& graph, double r, Rng& rng) {
    if (!(r >= 0.0 && r <= 1.0)) throw DomainError("p-sampling probability must lie in [0,1]");
    std::vector<std::uint8_t> keep(graph.vertex_count());
    for (auto& k : keep) k = rng.uniform() < r ? 1 : 0;
    return induced_subgraph(graph, keep);
}

UndirectedGraph p_sample(const UndirectedGraph& graph, double r, std::uint64_t seed) {
    Rng rng(seed);
    return p_sample(graph, r, rng);
}

}  // namespace graphex
