#include "graphex/models.hpp"

#include <algorithm>
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

bool has_sigma(ModelKind kind) {
    return kind != ModelKind::Dense && kind != ModelKind::AlmostDense;
}

double ggp_gamma(double sigma) { return std::tgamma(1.0 - sigma); }

// ((1+c)^s - 1)/s without cancellation for small c.
double power_increment(double c, double s) { return std::expm1(s * std::log1p(c)) / s; }

}  // namespace

namespace detail {

double ggp_rate(const ModelSpec& model) { return model.kind == ModelKind::GgpCaronFox ? 2.0 : 1.0; }

bool is_ggp(const ModelSpec& model) {
    return model.kind == ModelKind::Ggp || model.kind == ModelKind::GgpCaronFox;
}

double solve_upper_cut(double target, double lo, double hi, double (*f)(const void*, double),
                       const void* ctx) {
    if (f(ctx, lo) <= target) return lo;
    if (f(ctx, hi) > target) throw NumericalError("truncation bound not reachable within the search range");
    double a = std::log1p(lo), b = std::log1p(hi);
    for (int i = 0; i < 200 && b - a > 1e-13 * std::max(1.0, b); ++i) {
        const double m = 0.5 * (a + b);
        if (f(ctx, std::expm1(m)) <= target)
            b = m;
        else
            a = m;
    }
    return std::expm1(b);
}

double solve_lower_cut(double target, double hi, double (*f)(const void*, double), const void* ctx) {
    if (f(ctx, hi) <= target) return hi;
    double a = std::log(1e-300), b = std::log(hi);
    if (f(ctx, std::exp(a)) > target) throw NumericalError("lower truncation bound not reachable");
    for (int i = 0; i < 200 && b - a > 1e-13 * std::max(1.0, std::abs(a)); ++i) {
        const double m = 0.5 * (a + b);
        if (f(ctx, std::exp(m)) <= target)
            a = m;
        else
            b = m;
    }
    return std::exp(a);
}

}  // namespace detail

std::string_view model_key(ModelKind kind) {
    switch (kind) {
        case ModelKind::Dense: return "dense";
        case ModelKind::AlmostDense: return "almost-dense";
        case ModelKind::SparseSeparable: return "sparse-sep";
        case ModelKind::SparseNonSeparable: return "sparse-nonsep";
        case ModelKind::Ggp: return "ggp";
        case ModelKind::GgpCaronFox: return "ggp-cf";
    }
    return "unknown";
}

std::string ModelSpec::key() const { return std::string(model_key(kind)); }

ModelSpec make_model(ModelKind kind, double sigma) {
    ModelSpec m;
    m.kind = kind;
    if (!has_sigma(kind)) {
        m.sigma = 0.0;
    } else {
        if (!(sigma > 0.0 && sigma < 1.0)) throw DomainError("sigma must lie in (0,1) for this model");
        m.sigma = sigma;
    }
    const double s = m.sigma;
    switch (kind) {
        case ModelKind::Dense:
            m.eta = 1.0;
            m.nu_constant = 4.0 / 3.0;
            break;
        case ModelKind::AlmostDense:
            m.eta = 1.0;
            m.nu_constant = 0.5;
            break;
        case ModelKind::SparseSeparable:
            m.eta = 1.0;
            m.nu_constant = (1.0 - s) * (1.0 - s) / (s * (2.0 - s));
            break;
        case ModelKind::SparseNonSeparable:
            // Cauchy-Schwarz on the y-integral.
            m.eta = 0.5 * (1.0 + s);
            m.nu_constant = std::pow(s, -s) / (2.0 + s);
            break;
        case ModelKind::Ggp:
        case ModelKind::GgpCaronFox:
            m.eta = 1.0;
            m.nu_constant = 1.0 - s;
            break;
    }
    return m;
}

ModelSpec parse_model(std::string_view key, std::optional<double> sigma) {
    for (ModelKind kind : {ModelKind::Dense, ModelKind::AlmostDense, ModelKind::SparseSeparable,
                           ModelKind::SparseNonSeparable, ModelKind::Ggp, ModelKind::GgpCaronFox}) {
        if (model_key(kind) != key) continue;
        if (has_sigma(kind) && !sigma)
            throw DomainError("model '" + std::string(key) + "' requires sigma");
        return make_model(kind, sigma.value_or(0.0));
    }
    throw DomainError("unknown model key '" + std::string(key) + "'");
}

double graphon(const ModelSpec& model, double x, double y) {
    check_coordinate(x);
    check_coordinate(y);
    const double s = model.sigma;
    switch (model.kind) {
        case ModelKind::Dense:
            return (x <= 1.0 && y <= 1.0) ? (1.0 - x) * (1.0 - y) : 0.0;
        case ModelKind::AlmostDense: return std::exp(-x - y);
        case ModelKind::SparseSeparable: return std::pow((1.0 + x) * (1.0 + y), -1.0 / s);
        case ModelKind::SparseNonSeparable: return std::pow(1.0 + x + y, -1.0 / s - 1.0);
        case ModelKind::Ggp:
        case ModelKind::GgpCaronFox: return -std::expm1(-detail::ggp_rate(model) * x * y);
    }
    return 0.0;
}

double self_loop_probability(const ModelSpec& model, double x) {
    check_coordinate(x);
    if (detail::is_ggp(model)) return -std::expm1(-x * x);
    return graphon(model, x, x);
}

double base_density(const ModelSpec& model, double x) {
    check_coordinate(x);
    if (!detail::is_ggp(model)) return 1.0;
    if (x == 0.0) return std::numeric_limits<double>::infinity();
    const double s = model.sigma;
    return std::exp(-(1.0 + s) * std::log(x) - x) / ggp_gamma(s);
}

double eval_mu(const ModelSpec& model, double x) {
    check_coordinate(x);
    const double s = model.sigma;
    switch (model.kind) {
        case ModelKind::Dense: return x <= 1.0 ? 0.5 * (1.0 - x) : 0.0;
        case ModelKind::AlmostDense: return std::exp(-x);
        case ModelKind::SparseSeparable: return std::pow(1.0 + x, -1.0 / s) * s / (1.0 - s);
        case ModelKind::SparseNonSeparable: return s * std::pow(1.0 + x, -1.0 / s);
        case ModelKind::Ggp:
        case ModelKind::GgpCaronFox: return power_increment(detail::ggp_rate(model) * x, s);
    }
    return 0.0;
}

double eval_nu(const ModelSpec& model, double x, double y) {
    check_coordinate(x);
    check_coordinate(y);
    const double s = model.sigma;
    switch (model.kind) {
        case ModelKind::Dense:
            return (x <= 1.0 && y <= 1.0) ? (1.0 - x) * (1.0 - y) / 3.0 : 0.0;
        case ModelKind::AlmostDense: return 0.5 * std::exp(-x - y);
        case ModelKind::SparseSeparable:
            return std::pow((1.0 + x) * (1.0 + y), -1.0 / s) * s / (2.0 - s);
        case ModelKind::SparseNonSeparable: {
            const double a = 1.0 / s + 1.0;
            const double lo = std::min(x, y);
            // Integrate over t = log(1 + min + z).
            auto f = [&](double t) {
                const double u = std::exp(t);
                const double z = u - 1.0 - lo;
                return std::pow(1.0 + x + z, -a) * std::pow(1.0 + y + z, -a) * u;
            };
            auto tail = [&](double t) { return std::exp((1.0 - 2.0 * a) * t) / (2.0 * a - 1.0); };
            const double t0 = std::log1p(lo);
            QuadratureOptions opts;
            opts.rel_tol = 1e-10;
            return integrate_with_tails(f, t0, t0 + 4.0, nullptr, tail, opts).value;
        }
        case ModelKind::Ggp:
        case ModelKind::GgpCaronFox: {
            const double c = detail::ggp_rate(model);
            const double u = c * x, v = c * y;
            // mu(x) + mu(y) - mu(x + y) in increment form.
            return power_increment(u, s) + power_increment(v, s) - power_increment(u + v, s);
        }
    }
    return 0.0;
}

std::optional<double> slowly_varying_limit(const ModelSpec& model) {
    const double s = model.sigma;
    switch (model.kind) {
        case ModelKind::Dense: return 1.0;
        case ModelKind::AlmostDense: return std::nullopt;
        case ModelKind::SparseSeparable: return std::pow(s / (1.0 - s), s);
        case ModelKind::SparseNonSeparable: return std::pow(s, s);
        case ModelKind::Ggp:
        case ModelKind::GgpCaronFox:
            return std::pow(detail::ggp_rate(model), s) / (s * ggp_gamma(s));
    }
    return std::nullopt;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Omitted-edge bound from latent points above x (x = inf gives 0).
double upper_tail_bound(const ModelSpec& model, double size, double x) {
    if (x == kInf) return 0.0;
    const double s = model.sigma;
    switch (model.kind) {
        case ModelKind::Dense: return x >= 1.0 ? 0.0 : kInf;
        case ModelKind::AlmostDense: return size * size * std::exp(-x) + size * std::exp(-2.0 * x) / 2.0;
        case ModelKind::SparseSeparable: {
            const double c = s / (1.0 - s);
            return size * size * c * c * std::pow(1.0 + x, 1.0 - 1.0 / s) +
                   size * std::pow(1.0 + x, 1.0 - 2.0 / s) * s / (2.0 - s);
        }
        case ModelKind::SparseNonSeparable:
            return size * size * s * s / (1.0 - s) * std::pow(1.0 + x, 1.0 - 1.0 / s) +
                   size * std::pow(1.0 + 2.0 * x, -1.0 / s) * s / 2.0;
        case ModelKind::Ggp:
        case ModelKind::GgpCaronFox: {
            const double g = ggp_gamma(s);
            const double c = detail::ggp_rate(model);
            return size * size * std::pow(c, s) * std::exp(-x) / (x * s * g) +
                   size * std::exp(-(1.0 + s) * std::log(x) - x) / g;
        }
    }
    return kInf;
}

// Omitted-edge bound from latent points below x (only GGP has mass near 0).
double lower_tail_bound(const ModelSpec& model, double size, double x) {
    if (!detail::is_ggp(model) || x <= 0.0) return 0.0;
    const double s = model.sigma;
    const double g = ggp_gamma(s);
    return size * size * detail::ggp_rate(model) * std::pow(x, 1.0 - s) / ((1.0 - s) * g) +
           size * std::pow(x, 2.0 - s) / ((2.0 - s) * g);
}

}  // namespace

double omitted_edge_bound(const ModelSpec& model, double size, LatentWindow window) {
    return lower_tail_bound(model, size, window.lo) + upper_tail_bound(model, size, window.hi);
}

LatentWindow truncation_bounds(const ModelSpec& model, double size, double budget) {
    if (!(size > 0.0)) throw DomainError("size must be positive");
    if (!(budget > 0.0)) throw DomainError("budget must be positive");
    if (model.kind == ModelKind::Dense) return {0.0, 1.0};
    if (!detail::is_ggp(model)) {
        const double hi = detail::upper_cut(budget, 0.0, 1e300,
                                            [&](double x) { return upper_tail_bound(model, size, x); });
        return {0.0, hi};
    }
    const double half = 0.5 * budget;
    const double hi = detail::upper_cut(half, 1e-3, 1e6,
                                        [&](double x) { return upper_tail_bound(model, size, x); });
    const double lo = detail::lower_cut(half, hi,
                                        [&](double x) { return lower_tail_bound(model, size, x); });
    return {lo, hi};
}

}  // namespace graphex
