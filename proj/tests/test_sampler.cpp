#include <doctest.h>

#include <cmath>
#include <vector>

#include "graphex/error.hpp"
#include "graphex/models.hpp"
#include "graphex/quadrature.hpp"
#include "graphex/sampler.hpp"

using namespace graphex;

namespace {

struct Moments {
    double mean = 0.0;
    double se = 0.0;
};

Moments moments(const std::vector<double>& xs) {
    double m = 0.0;
    for (double x : xs) m += x;
    m /= xs.size();
    double v = 0.0;
    for (double x : xs) v += (x - m) * (x - m);
    v /= (xs.size() - 1);
    return {m, std::sqrt(v / xs.size())};
}

bool within(const Moments& a, double target, double k = 4.0) { return std::abs(a.mean - target) <= k * a.se; }

bool within(const Moments& a, const Moments& b, double k = 4.0) {
    return std::abs(a.mean - b.mean) <= k * std::hypot(a.se, b.se);
}

}  // namespace

TEST_CASE("same seed, same graph") {
    const auto m = make_model(ModelKind::Ggp, 0.5);
    const auto a = sample_unipartite(m, 30.0, kDefaultBudget, 42);
    const auto b = sample_unipartite(m, 30.0, kDefaultBudget, 42);
    CHECK(a == b);
    const auto c = sample_unipartite(m, 30.0, kDefaultBudget, 43);
    CHECK_FALSE(a == c);
}

TEST_CASE("dense edge counts match size^2/8 + size/3") {
    const auto m = make_model(ModelKind::Dense);
    std::vector<double> edges, loops;
    for (std::uint64_t s = 0; s < 400; ++s) {
        const auto g = sample_unipartite(m, 20.0, kDefaultBudget, s);
        edges.push_back(static_cast<double>(g.edge_count() - g.self_loop_count()));
        loops.push_back(static_cast<double>(g.self_loop_count()));
        for (double x : g.latent()) CHECK((x >= 0.0 && x <= 1.0));
    }
    CHECK(within(moments(edges), 400.0 / 8.0));
    CHECK(within(moments(loops), 20.0 / 3.0));
}

TEST_CASE("GGP edge counts match size^2/2 int mu rho") {
    const auto m = make_model(ModelKind::Ggp, 0.5);
    const double size = 15.0;
    QuadratureOptions opts;
    opts.rel_tol = 1e-10;
    // int mu rho in t = log x
    const double density =
        integrate([&](double t) { const double x = std::exp(t); return eval_mu(m, x) * base_density(m, x) * x; },
                  -40.0, 4.0, opts)
            .value;
    std::vector<double> edges;
    for (std::uint64_t s = 0; s < 400; ++s) {
        const auto g = sample_unipartite(m, size, kDefaultBudget, s);
        edges.push_back(static_cast<double>(g.edge_count() - g.self_loop_count()));
        const auto w = truncation_bounds(m, size, kDefaultBudget / 2.0);
        for (double x : g.latent()) CHECK((x >= w.lo && x <= w.hi));
    }
    CHECK(within(moments(edges), size * size * density / 2.0));
}

TEST_CASE("property: p-sampling at r matches sampling at r*size") {
    for (const auto& m : {make_model(ModelKind::Dense), make_model(ModelKind::SparseSeparable, 0.3)}) {
        CAPTURE(m.key());
        std::vector<double> va, ea, vb, eb;
        for (std::uint64_t s = 0; s < 300; ++s) {
            const auto big = sample_unipartite(m, 20.0, kDefaultBudget, s);
            const auto sub = p_sample(big, 0.5, 1000 + s);
            va.push_back(static_cast<double>(sub.vertex_count()));
            ea.push_back(static_cast<double>(sub.edge_count()));
            const auto direct = sample_unipartite(m, 10.0, kDefaultBudget, 5000 + s);
            vb.push_back(static_cast<double>(direct.vertex_count()));
            eb.push_back(static_cast<double>(direct.edge_count()));
        }
        CHECK(within(moments(va), moments(vb)));
        CHECK(within(moments(ea), moments(eb)));
    }
}

TEST_CASE("p_sample edge cases") {
    const auto g = sample_unipartite(make_model(ModelKind::Dense), 15.0, kDefaultBudget, 3);
    CHECK(p_sample(g, 1.0, 9) == g);
    CHECK(p_sample(g, 0.0, 9).empty());
    CHECK_THROWS_AS(p_sample(g, 1.5, 9), DomainError);
    CHECK_THROWS_AS(p_sample(g, -0.1, 9), DomainError);
    const auto sub = p_sample(g, 0.5, 9);
    for (std::size_t i = 0; i < sub.vertex_count(); ++i)
        CHECK((sub.non_self_degree_at(i) > 0 || sub.has_self_loop_at(i)));
    for (const auto id : sub.ids()) CHECK(g.index_of(id).has_value());
}

TEST_CASE("bipartite dense edges match s*alpha/4") {
    const auto m = make_bipartite_model(BipartiteKind::Dense);
    std::vector<double> edges;
    for (std::uint64_t s = 0; s < 400; ++s)
        edges.push_back(static_cast<double>(sample_bipartite(m, 10.0, 20.0, kDefaultBudget, s).edge_count()));
    CHECK(within(moments(edges), 50.0));
}

TEST_CASE("bipartite GGP edges match s*alpha*edge_density") {
    const auto m = make_bipartite_model(BipartiteKind::Ggp, 0.5, 0.5);
    std::vector<double> edges;
    for (std::uint64_t s = 0; s < 400; ++s)
        edges.push_back(static_cast<double>(sample_bipartite(m, 10.0, 10.0, kDefaultBudget, s).edge_count()));
    CHECK(within(moments(edges), 100.0 * m.edge_density));
}

TEST_CASE("invalid arguments") {
    const auto m = make_model(ModelKind::Dense);
    CHECK_THROWS_AS(sample_unipartite(m, 0.0, kDefaultBudget, 1), DomainError);
    CHECK_THROWS_AS(sample_unipartite(m, 10.0, 0.0, 1), DomainError);
}

TEST_CASE("infeasible core sizes are reported instead of exhausting memory") {
    CHECK_THROWS_AS(sample_unipartite(make_model(ModelKind::SparseNonSeparable, 0.8), 50.0, kDefaultBudget, 1),
                    NumericalError);
}
