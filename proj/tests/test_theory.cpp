#include <doctest.h>

#include <cmath>
#include <vector>

#include "graphex/error.hpp"
#include "graphex/theory.hpp"

using namespace graphex;

namespace {

std::vector<ModelSpec> all_models() {
    return {make_model(ModelKind::Dense),
            make_model(ModelKind::AlmostDense),
            make_model(ModelKind::SparseSeparable, 0.3),
            make_model(ModelKind::SparseNonSeparable, 0.3),
            make_model(ModelKind::Ggp, 0.5),
            make_model(ModelKind::GgpCaronFox, 0.5)};
}

// int_0^1 (1 - exp(-c(1-x)/2)) dx
double dense_vertex_integral(double c) { return 1.0 - 2.0 / c * (1.0 - std::exp(-c / 2.0)); }

// int_0^inf (1 - exp(-c e^{-x})) dx = sum_k (-1)^{k+1} c^k / (k k!)
double ein(double c) {
    double sum = 0.0, term = 1.0;
    for (int k = 1; k < 200; ++k) {
        term *= c / k;
        sum += (k % 2 ? 1.0 : -1.0) * term / k;
    }
    return sum;
}

}  // namespace

TEST_CASE("expected N_p against closed forms") {
    const auto dense = make_model(ModelKind::Dense);
    const auto ad = make_model(ModelKind::AlmostDense);
    for (const double size : {1.0, 10.0, 80.0})
        for (const double p : {0.25, 0.5, 1.0}) {
            CHECK(expected_N_p(dense, p, size) ==
                  doctest::Approx(p * size * dense_vertex_integral(p * size)).epsilon(1e-9));
            CHECK(expected_N_p(ad, p, size / 8.0) == doctest::Approx(p * size / 8.0 * ein(p * size / 8.0)).epsilon(1e-9));
        }
}

TEST_CASE("GGP expected N_1 follows its leading order") {
    const auto m = make_model(ModelKind::Ggp, 0.5);
    const double ratio = expected_N_p(m, 1.0, 400.0) / (std::pow(400.0, 1.5) / 0.5);
    CHECK(std::abs(ratio - 1.0) <= 0.1);
    CHECK(asymptotic_N_1(m, 400.0) == doctest::Approx(std::pow(400.0, 1.5) / 0.5).epsilon(1e-12));
    CHECK_THROWS_AS(asymptotic_N_1(make_model(ModelKind::AlmostDense), 10.0), DomainError);
}

TEST_CASE("property: thinning by p is a change of size") {
    for (const auto& m : all_models()) {
        CAPTURE(m.key());
        for (const double p : {0.25, 0.5, 0.75})
            for (const double a : {10.0, 100.0, 1000.0})
                CHECK(expected_N_p(m, p, a) == doctest::Approx(expected_N_p(m, 1.0, p * a)).epsilon(1e-6));
    }
}

TEST_CASE("property: expected N_1 and expected N_1 per unit size both increase") {
    for (const auto& m : all_models()) {
        CAPTURE(m.key());
        double prev = 0.0, prev_rate = 0.0;
        for (double a = 1.0; a <= 4096.0; a *= 2.0) {
            const double v = expected_N_p(m, 1.0, a);
            CHECK(v > prev);
            CHECK(v / a >= prev_rate);
            prev = v;
            prev_rate = v / a;
        }
    }
}

TEST_CASE("bias examples") {
    CHECK(bias_from_expectations(8.0, 2.0, 0.5, 0.25) == doctest::Approx(0.75));
    CHECK(std::abs(bias_b(make_model(ModelKind::Dense), 0.5, 1e4)) <= 1e-3);
    const auto ggp = make_model(ModelKind::Ggp, 0.5);
    std::vector<double> scaled;
    for (double a = 1e2; a <= 1e6; a *= 10.0) scaled.push_back(std::abs(bias_b(ggp, 0.5, a)) * std::sqrt(a));
    for (const double s : scaled) {
        CHECK(s <= 3.0 * scaled.front());
        CHECK(s >= scaled.front() / 3.0);
    }
}

TEST_CASE("log-log slope uses the top half only") {
    std::vector<double> xs, ys;
    for (int i = 0; i < 9; ++i) {
        const double x = std::pow(2.0, i + 4);
        xs.push_back(x);
        ys.push_back(i < 4 ? 1e6 * (i + 1) : 3.0 * std::pow(x, -0.7));
    }
    CHECK(top_half_loglog_slope(xs, ys) == doctest::Approx(-0.7).epsilon(1e-10));
}

TEST_CASE("dense Gamma slope") {
    std::vector<double> sizes;
    for (int k = 4; k <= 12; ++k) sizes.push_back(std::ldexp(1.0, k));
    const auto d = gamma_diagnostic(make_model(ModelKind::Dense), 0.5, sizes);
    CHECK(d.sizes == sizes);
    CHECK(d.gamma_values.size() == sizes.size());
    CHECK(std::abs(d.slope + 1.0) <= 0.1);
}

TEST_CASE("bipartite expectations, dense closed forms") {
    const auto m = make_bipartite_model(BipartiteKind::Dense);
    const double s = 20.0, alpha = 30.0;
    CHECK(expected_left_vertices(m, s, alpha) == doctest::Approx(s * dense_vertex_integral(alpha)).epsilon(1e-9));
    CHECK(expected_M(m, s, alpha) == doctest::Approx(s / 2.0 * dense_vertex_integral(alpha / 2.0)).epsilon(1e-9));
    // D_1 = s alpha int mu e^{-alpha mu} with mu = (1-x)/2
    const double a = alpha / 2.0;
    const double d1 = s * alpha * 0.5 * (1.0 - std::exp(-a) * (1.0 + a)) / (a * a);
    CHECK(expected_Dk(m, s, alpha, 1) == doctest::Approx(d1).epsilon(1e-9));
}

TEST_CASE("GGP expected M follows its leading order") {
    const auto m = make_bipartite_model(BipartiteKind::Ggp, 0.5, 0.5);
    const double lead = 0.5 * std::sqrt(200.0) * slowly_varying_limit_v(m) * std::tgamma(0.5);
    CHECK(std::abs(expected_M(m, 1.0, 400.0) / lead - 1.0) <= 0.1);
}

TEST_CASE("property: degree classes add up to the vertex count") {
    for (const auto& m : {make_bipartite_model(BipartiteKind::Dense),
                          make_bipartite_model(BipartiteKind::SparseSeparable, 0.4, 0.4),
                          make_bipartite_model(BipartiteKind::Ggp, 0.5, 0.5)}) {
        CAPTURE(m.key());
        const double s = 10.0, alpha = 6.0;
        double sum = 0.0;
        for (unsigned k = 1; k <= 120; ++k) sum += expected_Dk(m, s, alpha, k);
        CHECK(std::abs(sum - expected_left_vertices(m, s, alpha)) <= 1e-4 * expected_left_vertices(m, s, alpha));
    }
}

TEST_CASE("invalid arguments") {
    const auto m = make_model(ModelKind::Dense);
    CHECK_THROWS_AS(expected_N_p(m, 0.0, 10.0), DomainError);
    CHECK_THROWS_AS(expected_N_p(m, 0.5, -1.0), DomainError);
    CHECK_THROWS_AS(expected_Dk(make_bipartite_model(BipartiteKind::Dense), 1.0, 1.0, 0), DomainError);
}
