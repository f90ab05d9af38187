#include "graphex/theory.hpp"

#include <cmath>
#include <algorithm>
#include <functional>

#include "graphex/error.hpp"
#include "graphex/quadrature.hpp"

namespace graphex {

namespace {

// Shape of the marginal and its base measure, enough to choose a
// substitution and bound the tails.
struct MuLaw {
    enum class Kind { Unit, Exponential, Power, Ggp };
    Kind kind = Kind::Unit;
    double amplitude = 1.0;  // Unit A(1-x), Exponential A e^{-x}, Power A(1+x)^{-1/s}, Ggp rate kappa
    double sigma = 0.0;      // decay of mu (Power) or tail of rho (Ggp)
    double mu_sigma = 0.0;   // Ggp: mu = ((1+kappa x)^{mu_sigma} - 1)/mu_sigma
};

MuLaw law_of(const ModelSpec& m) {
    switch (m.kind) {
        case ModelKind::Dense: return {MuLaw::Kind::Unit, 0.5, 0.0, 0.0};
        case ModelKind::AlmostDense: return {MuLaw::Kind::Exponential, 1.0, 0.0, 0.0};
        case ModelKind::SparseSeparable:
            return {MuLaw::Kind::Power, m.sigma / (1.0 - m.sigma), m.sigma, 0.0};
        case ModelKind::SparseNonSeparable: return {MuLaw::Kind::Power, m.sigma, m.sigma, 0.0};
        case ModelKind::Ggp:
        case ModelKind::GgpCaronFox: return {MuLaw::Kind::Ggp, detail::ggp_rate(m), m.sigma, m.sigma};
    }
    return {};
}

MuLaw law_of(const BipartiteModelSpec& b) {
    switch (b.kind) {
        case BipartiteKind::Dense: return {MuLaw::Kind::Unit, 0.5, 0.0, 0.0};
        case BipartiteKind::SparseSeparable:
            return {MuLaw::Kind::Power, b.sigma_w / (1.0 - b.sigma_w), b.sigma_v, 0.0};
        case BipartiteKind::Ggp: return {MuLaw::Kind::Ggp, 1.0, b.sigma_v, b.sigma_w};
    }
    return {};
}

// int g(mu(x)) rho(dx) for g with g(m) <= lip * m^power and g <= g_max.
double integrate_mu(const MuLaw& law, const std::function<double(double)>& g, double lip, double power,
                    double g_max, double rel_tol) {
    QuadratureOptions opts;
    opts.rel_tol = rel_tol;
    const double A = law.amplitude;
    switch (law.kind) {
        case MuLaw::Kind::Unit:
            return integrate([&](double x) { return g(A * (1.0 - x)); }, 0.0, 1.0, opts).value;
        case MuLaw::Kind::Exponential:
            // u = e^{-x}
            return integrate([&](double u) { return g(A * u) / u; }, 0.0, 1.0, opts).value;
        case MuLaw::Kind::Power: {
            // t = log(1+x)
            const double s = law.sigma;
            auto f = [&](double t) { return g(A * std::exp(-t / s)) * std::exp(t); };
            auto tail = [&](double t) {
                const double q = power / s;
                return lip * std::pow(A, power) * std::exp((1.0 - q) * t) / (q - 1.0);
            };
            return integrate_with_tails(f, 0.0, 8.0 * s, nullptr, tail, opts).value;
        }
        case MuLaw::Kind::Ggp: {
            // t = log x
            const double s = law.sigma, ms = law.mu_sigma;
            const double gam = std::tgamma(1.0 - s);
            auto mu = [&](double x) { return std::expm1(ms * std::log1p(A * x)) / ms; };
            auto f = [&](double t) {
                const double x = std::exp(t);
                return g(mu(x)) * std::exp(-s * t - x) / gam;
            };
            auto left = [&](double t) {
                return lip * std::pow(A, power) * std::exp((power - s) * t) / ((power - s) * gam);
            };
            auto right = [&](double t) { return g_max * std::exp(-(1.0 + s) * t - std::exp(t)) / gam; };
            return integrate_with_tails(f, -6.0, 3.0, left, right, opts).value;
        }
    }
    return 0.0;
}

double vertex_integral_law(const MuLaw& law, double c, double rel_tol) {
    return integrate_mu(law, [c](double m) { return -std::expm1(-c * m); }, c, 1.0, 1.0, rel_tol);
}

void check_tol(double rel_tol) {
    if (!(rel_tol >= 1e-12)) throw DomainError("rel_tol must be at least 1e-12");
}

}  // namespace

double vertex_integral(const ModelSpec& model, double c, double rel_tol) {
    check_tol(rel_tol);
    return vertex_integral_law(law_of(model), c, rel_tol);
}

double expected_N_p(const ModelSpec& model, double p, double size, double rel_tol) {
    if (!(p > 0.0 && p <= 1.0)) throw DomainError("p must lie in (0,1]");
    if (!(size > 0.0)) throw DomainError("size must be positive");
    const double c = p * size;
    return c * vertex_integral(model, c, rel_tol);
}

double bias_from_expectations(double en1, double enp, double p, double sigma) {
    return std::log(en1 / enp) / -std::log(p) - 1.0 - sigma;
}

double bias_b(const ModelSpec& model, double p, double size, double rel_tol) {
    if (!(p > 0.0 && p < 1.0)) throw DomainError("p must lie in (0,1)");
    return bias_from_expectations(expected_N_p(model, 1.0, size, rel_tol), expected_N_p(model, p, size, rel_tol),
                                  p, model.sigma);
}

double asymptotic_N_1(const ModelSpec& model, double size) {
    const auto ell = slowly_varying_limit(model);
    if (!ell) throw DomainError("model has no constant slowly-varying limit");
    return std::pow(size, 1.0 + model.sigma) * *ell * std::tgamma(1.0 - model.sigma);
}

double top_half_loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size() || xs.size() < 2) throw DomainError("slope needs at least two points");
    const std::size_t n = xs.size();
    const std::size_t first = std::min(n - (n + 1) / 2, n - 2);
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double m = static_cast<double>(n - first);
    for (std::size_t i = first; i < n; ++i) {
        const double lx = std::log(xs[i]), ly = std::log(ys[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (sxy - sx * sy / m) / (sxx - sx * sx / m);
}

BiasDiagnostics gamma_diagnostic(const ModelSpec& model, double p, const std::vector<double>& sizes,
                                 double rel_tol) {
    if (!(p > 0.0 && p < 1.0)) throw DomainError("p must lie in (0,1)");
    for (std::size_t i = 1; i < sizes.size(); ++i)
        if (!(sizes[i] > sizes[i - 1])) throw DomainError("sizes must be increasing");
    BiasDiagnostics d;
    d.sizes = sizes;
    const double ps = std::pow(p, model.sigma);
    for (const double a : sizes) {
        const double ip = vertex_integral(model, p * a, rel_tol);
        const double i1 = vertex_integral(model, a, rel_tol);
        d.gamma_values.push_back(std::abs(ip / (ps * i1) - 1.0));
        d.bias_values.push_back(bias_from_expectations(a * i1, p * a * ip, p, model.sigma));
    }
    if (sizes.size() >= 2) d.slope = top_half_loglog_slope(d.sizes, d.gamma_values);
    return d;
}

double expected_M(const BipartiteModelSpec& model, double s, double alpha, double rel_tol) {
    check_tol(rel_tol);
    if (!(s > 0.0) || !(alpha > 0.0)) throw DomainError("s and alpha must be positive");
    return 0.5 * s * vertex_integral_law(law_of(model), 0.5 * alpha, rel_tol);
}

double expected_left_vertices(const BipartiteModelSpec& model, double s, double alpha, double rel_tol) {
    check_tol(rel_tol);
    if (!(s > 0.0) || !(alpha > 0.0)) throw DomainError("s and alpha must be positive");
    return s * vertex_integral_law(law_of(model), alpha, rel_tol);
}

double expected_Dk(const BipartiteModelSpec& model, double s, double alpha, unsigned k, double rel_tol) {
    check_tol(rel_tol);
    if (k < 1) throw DomainError("k must be at least 1");
    if (!(s > 0.0) || !(alpha > 0.0)) throw DomainError("s and alpha must be positive");
    const double kd = static_cast<double>(k);
    const double log_norm = std::lgamma(kd + 1.0);
    auto g = [&](double m) {
        if (m <= 0.0) return 0.0;
        const double z = alpha * m;
        return std::exp(kd * std::log(z) - z - log_norm);
    };
    const double lip = std::exp(kd * std::log(alpha) - log_norm);
    return s * integrate_mu(law_of(model), g, lip, kd, 1.0, rel_tol);
}

}  // namespace graphex
