#include <doctest.h>

#include <cmath>
#include <functional>

#include "graphex/bipartite_models.hpp"
#include "graphex/error.hpp"
#include "graphex/quadrature.hpp"

using namespace graphex;

namespace {

// int f against the measure with tail index s of a given family.
double against(BipartiteKind kind, double s, const std::function<double(double)>& f) {
    QuadratureOptions opts;
    opts.rel_tol = 1e-11;
    switch (kind) {
        case BipartiteKind::Dense: return integrate(f, 0.0, 1.0, opts).value;
        case BipartiteKind::SparseSeparable: {
            auto g = [&](double t) { return f(std::expm1(t)) * std::exp(t); };
            auto tail = [&](double t) { return std::exp((1.0 - 1.0 / s) * t) / (1.0 / s - 1.0); };
            return integrate_with_tails(g, 0.0, 5.0, nullptr, tail, opts).value;
        }
        case BipartiteKind::Ggp: {
            const double gam = std::tgamma(1.0 - s);
            auto g = [&](double t) {
                const double y = std::exp(t);
                const double v = f(y);
                return v == 0.0 ? 0.0 : v * std::exp(-s * t - y) / gam;
            };
            auto left = [&](double t) { return 40.0 * std::exp((1.0 - s) * t) / ((1.0 - s) * gam); };
            auto right = [&](double t) { return std::exp(-(1.0 + s) * t - std::exp(t)) / gam; };
            return integrate_with_tails(g, -8.0, 3.0, left, right, opts).value;
        }
    }
    return 0.0;
}

}  // namespace

TEST_CASE("property: mu_v, mu_w and nu_v match quadrature") {
    const BipartiteModelSpec models[] = {make_bipartite_model(BipartiteKind::Dense),
                                         make_bipartite_model(BipartiteKind::SparseSeparable, 0.3, 0.6),
                                         make_bipartite_model(BipartiteKind::Ggp, 0.5, 0.3)};
    for (const auto& m : models) {
        CAPTURE(m.key());
        for (const double x : {0.0, 0.1, 0.7, 4.0, 30.0}) {
            const double mv = against(m.kind, m.sigma_w, [&](double y) { return bipartite_graphon(m, x, y); });
            CHECK(mv == doctest::Approx(eval_mu_v(m, x)).epsilon(1e-7));
            const double mw = against(m.kind, m.sigma_v, [&](double y) { return bipartite_graphon(m, y, x); });
            CHECK(mw == doctest::Approx(eval_mu_w(m, x)).epsilon(1e-7));
            for (const double xp : {0.2, 2.0}) {
                const double nu = against(m.kind, m.sigma_w, [&](double y) {
                    return bipartite_graphon(m, x, y) * bipartite_graphon(m, xp, y);
                });
                CHECK(nu == doctest::Approx(eval_nu_v(m, x, xp)).epsilon(1e-7));
            }
        }
        const double dens = against(m.kind, m.sigma_v, [&](double x) { return eval_mu_v(m, x); });
        CHECK(dens == doctest::Approx(m.edge_density).epsilon(1e-7));
    }
}

TEST_CASE("mirrored constructions and validation") {
    const auto m = parse_bipartite_model("ggp", 0.5, std::nullopt);
    CHECK(m.sigma_w == 0.5);
    CHECK(m.key() == "ggp");
    CHECK(parse_bipartite_model("dense", std::nullopt, std::nullopt).edge_density == 0.25);
    CHECK_THROWS_AS(parse_bipartite_model("sparse-sep", std::nullopt, 0.5), DomainError);
    CHECK_THROWS_AS(make_bipartite_model(BipartiteKind::Ggp, 1.2, 0.5), DomainError);
    CHECK_THROWS_AS(parse_bipartite_model("x", 0.5, 0.5), DomainError);
    CHECK_THROWS_AS(eval_mu_v(m, -1.0), DomainError);
    const auto sep = make_bipartite_model(BipartiteKind::SparseSeparable, 0.4, 0.4);
    CHECK(sep.edge_density == doctest::Approx(4.0 / 9.0));
}

TEST_CASE("left slowly varying limit of the GGP mirror matches z^sigma F_v(z)") {
    const auto m = make_bipartite_model(BipartiteKind::Ggp, 0.5, 0.5);
    const double z = 1e-7;
    double lo = 0.0, hi = 1.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (eval_mu_v(m, mid) >= z ? hi : lo) = mid;
    }
    QuadratureOptions opts;
    opts.rel_tol = 1e-10;
    const double F =
        integrate([&](double t) { return left_density(m, std::exp(t)) * std::exp(t); }, std::log(hi), 5.0, opts).value;
    CHECK(std::pow(z, 0.5) * F == doctest::Approx(slowly_varying_limit_v(m)).epsilon(1e-3));
}

TEST_CASE("bipartite truncation keeps the omitted edge mass under budget") {
    const auto m = make_bipartite_model(BipartiteKind::Ggp, 0.5, 0.5);
    const double s = 100.0, alpha = 100.0, budget = 1e-3;
    const auto w = bipartite_truncation_bounds(m, s, alpha, budget);
    QuadratureOptions opts;
    opts.rel_tol = 1e-9;
    auto side = [&](const LatentWindow& win, auto mu, auto dens) {
        auto f = [&](double t) {
            const double x = std::exp(t);
            return s * alpha * mu(x) * dens(x) * x;
        };
        return integrate(f, std::log(win.lo) - 60.0, std::log(win.lo), opts).value +
               integrate(f, std::log(win.hi), std::log(win.hi) + 6.0, opts).value;
    };
    const double omitted =
        side(w.left, [&](double x) { return eval_mu_v(m, x); }, [&](double x) { return left_density(m, x); }) +
        side(w.right, [&](double y) { return eval_mu_w(m, y); }, [&](double y) { return right_density(m, y); });
    CHECK(omitted <= budget);
    CHECK_THROWS_AS(bipartite_truncation_bounds(m, 0.0, 1.0, 1e-3), DomainError);
    const auto d = bipartite_truncation_bounds(make_bipartite_model(BipartiteKind::Dense), 5.0, 5.0, 1e-3);
    CHECK(d.left.hi == 1.0);
}
