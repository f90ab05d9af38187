#include "graphex/bipartite_models.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "graphex/error.hpp"
#include "graphex/quadrature.hpp"

namespace graphex {

namespace {

void check_coordinate(double x) {
    if (!(x >= 0.0)) throw DomainError("latent coordinate must be nonnegative");
}

void check_sigma(double s) {
    if (!(s > 0.0 && s < 1.0)) throw DomainError("sigma must lie in (0,1)");
}

double increment(double c, double s) { return std::expm1(s * std::log1p(c)) / s; }

double ggp_density(double s, double x) {
    if (x == 0.0) return std::numeric_limits<double>::infinity();
    return std::exp(-(1.0 + s) * std::log(x) - x) / std::tgamma(1.0 - s);
}

// int mu_v rho over (0, inf) for the GGP mirror, in t = log x.
double ggp_edge_density(double sv, double sw) {
    const double g = std::tgamma(1.0 - sv);
    auto f = [&](double t) {
        const double x = std::exp(t);
        return increment(x, sw) * std::exp(-sv * t - x) / g;
    };
    auto left = [&](double t) { return std::exp((1.0 - sv) * t) / ((1.0 - sv) * g); };
    auto right = [&](double t) {
        const double x = std::exp(t);
        return std::exp((sw - 1.0 - sv) * t - x) / (sw * g);
    };
    QuadratureOptions opts;
    opts.rel_tol = 1e-10;
    return integrate_with_tails(f, -4.0, 4.0, left, right, opts).value;
}

// Omitted-edge bounds for one side of the GGP mirror: the side has tail
// index s (its own measure) and the opposite side tail index t.
double ggp_side_lower(double scale, double s, double x) {
    if (x <= 0.0) return 0.0;
    return scale * std::pow(x, 1.0 - s) / ((1.0 - s) * std::tgamma(1.0 - s));
}

double ggp_side_upper(double scale, double s, double t, double x) {
    return scale * std::exp((t - 1.0 - s) * std::log(x) - x) / (t * std::tgamma(1.0 - s));
}

}  // namespace

std::string BipartiteModelSpec::key() const {
    switch (kind) {
        case BipartiteKind::Dense: return "dense";
        case BipartiteKind::SparseSeparable: return "sparse-sep";
        case BipartiteKind::Ggp: return "ggp";
    }
    return "unknown";
}

BipartiteModelSpec make_bipartite_model(BipartiteKind kind, double sigma_v, double sigma_w) {
    BipartiteModelSpec m;
    m.kind = kind;
    switch (kind) {
        case BipartiteKind::Dense:
            m.edge_density = 0.25;
            return m;
        case BipartiteKind::SparseSeparable:
            check_sigma(sigma_v);
            check_sigma(sigma_w);
            m.sigma_v = sigma_v;
            m.sigma_w = sigma_w;
            m.edge_density = sigma_v * sigma_w / ((1.0 - sigma_v) * (1.0 - sigma_w));
            break;
        case BipartiteKind::Ggp:
            check_sigma(sigma_v);
            check_sigma(sigma_w);
            m.sigma_v = sigma_v;
            m.sigma_w = sigma_w;
            m.edge_density = ggp_edge_density(sigma_v, sigma_w);
            break;
    }
    if (!std::isfinite(m.edge_density) || m.edge_density <= 0.0)
        throw NumericalError("bipartite model has non-finite edge density");
    return m;
}

BipartiteModelSpec parse_bipartite_model(std::string_view key, std::optional<double> sigma_v,
                                         std::optional<double> sigma_w) {
    if (key == "dense") return make_bipartite_model(BipartiteKind::Dense);
    BipartiteKind kind;
    if (key == "sparse-sep")
        kind = BipartiteKind::SparseSeparable;
    else if (key == "ggp")
        kind = BipartiteKind::Ggp;
    else
        throw DomainError("unknown bipartite model key '" + std::string(key) + "'");
    if (!sigma_v) throw DomainError("bipartite model requires sigma_v");
    return make_bipartite_model(kind, *sigma_v, sigma_w.value_or(*sigma_v));
}

double bipartite_graphon(const BipartiteModelSpec& model, double x, double y) {
    check_coordinate(x);
    check_coordinate(y);
    switch (model.kind) {
        case BipartiteKind::Dense: return (x <= 1.0 && y <= 1.0) ? (1.0 - x) * (1.0 - y) : 0.0;
        case BipartiteKind::SparseSeparable:
            return std::pow(1.0 + x, -1.0 / model.sigma_v) * std::pow(1.0 + y, -1.0 / model.sigma_w);
        case BipartiteKind::Ggp: return -std::expm1(-x * y);
    }
    return 0.0;
}

double left_density(const BipartiteModelSpec& model, double x) {
    check_coordinate(x);
    return model.kind == BipartiteKind::Ggp ? ggp_density(model.sigma_v, x) : 1.0;
}

double right_density(const BipartiteModelSpec& model, double y) {
    check_coordinate(y);
    return model.kind == BipartiteKind::Ggp ? ggp_density(model.sigma_w, y) : 1.0;
}

double eval_mu_v(const BipartiteModelSpec& model, double x) {
    check_coordinate(x);
    switch (model.kind) {
        case BipartiteKind::Dense: return x <= 1.0 ? 0.5 * (1.0 - x) : 0.0;
        case BipartiteKind::SparseSeparable:
            return std::pow(1.0 + x, -1.0 / model.sigma_v) * model.sigma_w / (1.0 - model.sigma_w);
        case BipartiteKind::Ggp: return increment(x, model.sigma_w);
    }
    return 0.0;
}

double eval_mu_w(const BipartiteModelSpec& model, double y) {
    check_coordinate(y);
    switch (model.kind) {
        case BipartiteKind::Dense: return y <= 1.0 ? 0.5 * (1.0 - y) : 0.0;
        case BipartiteKind::SparseSeparable:
            return std::pow(1.0 + y, -1.0 / model.sigma_w) * model.sigma_v / (1.0 - model.sigma_v);
        case BipartiteKind::Ggp: return increment(y, model.sigma_v);
    }
    return 0.0;
}

double eval_nu_v(const BipartiteModelSpec& model, double x, double xp) {
    check_coordinate(x);
    check_coordinate(xp);
    const double sw = model.sigma_w;
    switch (model.kind) {
        case BipartiteKind::Dense:
            return (x <= 1.0 && xp <= 1.0) ? (1.0 - x) * (1.0 - xp) / 3.0 : 0.0;
        case BipartiteKind::SparseSeparable:
            return std::pow((1.0 + x) * (1.0 + xp), -1.0 / model.sigma_v) * sw / (2.0 - sw);
        case BipartiteKind::Ggp: return increment(x, sw) + increment(xp, sw) - increment(x + xp, sw);
    }
    return 0.0;
}

double slowly_varying_limit_v(const BipartiteModelSpec& model) {
    switch (model.kind) {
        case BipartiteKind::Dense: return 1.0;
        case BipartiteKind::SparseSeparable:
            return std::pow(model.sigma_w / (1.0 - model.sigma_w), model.sigma_v);
        case BipartiteKind::Ggp: return 1.0 / (model.sigma_v * std::tgamma(1.0 - model.sigma_v));
    }
    return 1.0;
}

BipartiteWindow bipartite_truncation_bounds(const BipartiteModelSpec& model, double s, double alpha,
                                            double budget) {
    if (!(s > 0.0) || !(alpha > 0.0)) throw DomainError("s and alpha must be positive");
    if (!(budget > 0.0)) throw DomainError("budget must be positive");
    if (model.kind == BipartiteKind::Dense) return {{0.0, 1.0}, {0.0, 1.0}};
    const double scale = s * alpha;
    const double sv = model.sigma_v, sw = model.sigma_w;
    if (model.kind == BipartiteKind::SparseSeparable) {
        const double half = 0.5 * budget;
        auto side = [&](double own, double other) {
            const double c = scale * other / (1.0 - other) * own / (1.0 - own);
            return detail::upper_cut(half, 0.0, 1e300,
                                     [&](double x) { return c * std::pow(1.0 + x, 1.0 - 1.0 / own); });
        };
        return {{0.0, side(sv, sw)}, {0.0, side(sw, sv)}};
    }
    const double quarter = 0.25 * budget;
    auto side = [&](double own, double other) {
        const double hi = detail::upper_cut(quarter, 1e-3, 1e6, [&](double x) {
            return ggp_side_upper(scale, own, other, x);
        });
        const double lo = detail::lower_cut(quarter, hi, [&](double x) {
            return ggp_side_lower(scale, own, x);
        });
        return LatentWindow{lo, hi};
    };
    return {side(sv, sw), side(sw, sv)};
}

}  // namespace graphex
