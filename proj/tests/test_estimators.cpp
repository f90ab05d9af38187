#include <doctest.h>

#include <cmath>
#include <random>
#include <utility>
#include <vector>

#include "graphex/error.hpp"
#include "graphex/estimators.hpp"
#include "graphex/graph.hpp"

using namespace graphex;

namespace {

using Edges = std::vector<std::pair<VertexId, VertexId>>;

// Disjoint copies of K_{k+1}: every vertex has k distinct neighbours.
UndirectedGraph regular(std::size_t k, std::size_t copies) {
    Edges edges;
    for (std::size_t c = 0; c < copies; ++c)
        for (std::size_t a = 0; a <= k; ++a)
            for (std::size_t b = a + 1; b <= k; ++b) edges.emplace_back(c * (k + 1) + a, c * (k + 1) + b);
    return UndirectedGraph::from_edges(edges);
}

UndirectedGraph random_graph(std::uint64_t seed, std::size_t n, double q, bool loops) {
    std::mt19937_64 gen(seed);
    std::bernoulli_distribution coin(q);
    Edges edges;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b)
            if ((a != b || loops) && coin(gen)) edges.emplace_back(a, b);
    return UndirectedGraph::from_edges(edges);
}

}  // namespace

TEST_CASE("regular graphs give the closed-form estimate") {
    for (std::size_t k = 1; k <= 8; ++k)
        for (const double p : {0.3, 0.5, 0.7}) {
            const auto g = regular(k, 7);
            const double expected = -std::log(1.0 - std::pow(1.0 - p, static_cast<double>(k))) / -std::log(p);
            CHECK(estimate_sigma_nsvr(g, p).sigma_hat == doctest::Approx(expected).epsilon(1e-12));
        }
}

TEST_CASE("count_N_p examples") {
    // path 0-1-2 with a loop on 2: degrees 1, 2, 1
    const Edges edges{{0, 1}, {1, 2}, {2, 2}};
    const auto g = UndirectedGraph::from_edges(edges);
    CHECK(count_N_p(g, 1.0) == 3.0);
    CHECK(count_N_p(g, 0.5) == doctest::Approx(0.5 * (0.5 + 0.75 + 0.5)));
    CHECK_THROWS_AS(count_N_p(g, 1.1), DomainError);
    // a vertex with only a self-loop counts for nothing
    const Edges lonely{{0, 1}, {5, 5}};
    CHECK(count_N_p(UndirectedGraph::from_edges(lonely), 1.0) == 2.0);
}

TEST_CASE("N_p below one yields zero") {
    const Edges edges{{0, 1}};
    const auto r = estimate_sigma_nsvr(UndirectedGraph::from_edges(edges), 0.5);
    CHECK(r.np == doctest::Approx(0.5));
    CHECK(r.sigma_hat == 0.0);
}

TEST_CASE("clamping") {
    const auto r = estimate_sigma_nsvr(regular(3, 10), 0.5, true);
    REQUIRE(r.sigma_clamped.has_value());
    CHECK(*r.sigma_clamped == r.sigma_hat);
    CHECK_FALSE(estimate_sigma_nsvr(regular(3, 10), 0.5, false).sigma_clamped.has_value());
}

TEST_CASE("CR arithmetic") {
    CHECK(estimate_sigma_cr(100, 1000) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(estimate_sigma_cr(10, 100) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(estimate_sigma_cr(1000, 1000) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK_THROWS_AS(estimate_sigma_cr(5, 1), UndefinedEstimate);
    CHECK_THROWS_AS(estimate_sigma_cr(0, 10), DomainError);
}

TEST_CASE("pow_by_squaring") {
    for (std::size_t k : {0u, 1u, 2u, 7u, 64u, 1001u})
        CHECK(pow_by_squaring(0.7, k) == doctest::Approx(std::pow(0.7, static_cast<double>(k))).epsilon(1e-13));
}

TEST_CASE("property: estimate lies in [0,1] and ignores labels and self-loops") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto g = random_graph(seed, 40, 0.05 + 0.01 * static_cast<double>(seed % 10), false);
        if (g.empty()) continue;
        for (const double p : {0.25, 0.5, 0.75}) {
            const auto r = estimate_sigma_nsvr(g, p);
            if (r.np >= 1.0) CHECK((r.sigma_hat >= -1e-12 && r.sigma_hat <= 1.0 + 1e-12));
        }
        auto relabeled = g.id_edges();
        for (auto& [a, b] : relabeled) {
            a = 977 * a + 13;
            b = 977 * b + 13;
        }
        CHECK(estimate_sigma_nsvr(UndirectedGraph::from_edges(relabeled)).sigma_hat ==
              doctest::Approx(estimate_sigma_nsvr(g).sigma_hat).epsilon(1e-12));
        auto looped = g.id_edges();
        for (const auto id : g.ids()) looped.emplace_back(id, id);
        CHECK(estimate_sigma_nsvr(UndirectedGraph::from_edges(looped)).sigma_hat ==
              doctest::Approx(estimate_sigma_nsvr(g).sigma_hat).epsilon(1e-12));
    }
}

TEST_CASE("bipartite estimator") {
    // every left vertex has degree one: M = |V|/4
    std::vector<VertexId> left{0, 1, 2, 3}, right{10, 11};
    std::vector<BipartiteGraph::IndexEdge> edges{{0, 0}, {1, 0}, {2, 1}, {3, 1}};
    const auto g = BipartiteGraph::from_indexed(left, right, edges);
    const auto r = estimate_sigma_bipartite(g);
    CHECK(r.np == doctest::Approx(1.0));
    CHECK(r.sigma_hat == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(estimate_sigma_bipartite(g, true).sigma_hat == doctest::Approx(2.0).epsilon(1e-14));
    CHECK_THROWS_AS(estimate_sigma_bipartite(BipartiteGraph{}), DomainError);
}
