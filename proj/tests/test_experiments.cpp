#include <doctest.h>

#include <sstream>

#include "graphex/error.hpp"
#include "graphex/experiments.hpp"
#include "graphex/sampler.hpp"

using namespace graphex;

namespace {

ExperimentConfig risk_config() {
    ExperimentConfig c;
    c.kind = ExperimentKind::RiskTable;
    c.model = "ggp";
    c.sigma = 0.5;
    c.sizes = {10.0, 20.0};
    c.estimators = {"nsvr", "cr", "zero", "oracle"};
    c.replicates = 40;
    c.seed = 5;
    return c;
}

}  // namespace

TEST_CASE("risk table: reference estimators and determinism") {
    auto c = risk_config();
    const auto t = run_risk_table(c);
    CHECK(t.value(10.0, "oracle", "rmse") == 0.0);
    CHECK(t.value(20.0, "zero", "rmse") == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(t.value(20.0, "nsvr", "rmse") > 0.0);
    CHECK(t.find(10.0, "graph", "mean_v") != nullptr);
    CHECK(t.find(20.0, "graph", "mean_e")->n_reps == 40);
    c.serial = true;
    CHECK(run_risk_table(c).rows == t.rows);
    c.seed = 6;
    CHECK_FALSE(run_risk_table(c).rows == t.rows);
}

TEST_CASE("species table: oracle and zero bracket the truth") {
    ExperimentConfig c;
    c.kind = ExperimentKind::SpeciesTable;
    c.model = "ggp";
    c.sigma = 0.5;
    c.sizes = {30.0};
    c.estimators = {"nsvr", "zero", "oracle"};
    c.replicates = 30;
    const auto t = run_species_table(c);
    CHECK(t.value(30.0, "zero", "nrmse") > t.value(30.0, "oracle", "nrmse"));
    CHECK(t.value(30.0, "graph", "mean_v_alpha") < t.value(30.0, "graph", "mean_v_beta"));
    c.beta_ratio = 1.0;
    CHECK_THROWS_AS(run_species_table(c), DomainError);
}

TEST_CASE("real evaluation at r=1 is exact") {
    const auto g = sample_unipartite(make_model(ModelKind::Dense), 20.0, kDefaultBudget, 1);
    ExperimentConfig c;
    c.r = 1.0;
    c.replicates = 3;
    c.estimators = {"nsvr", "cr", "zero"};
    const auto t = run_real_eval(g, c);
    for (const auto* est : {"nsvr", "cr", "zero"}) CHECK(t.value(0.0, est, "nrmse") == 0.0);
    CHECK(t.value(0.0, "graph", "mean_v_sub") == static_cast<double>(g.vertex_count()));
    c.r = 0.5;
    c.replicates = 50;
    c.estimators = {"nsvr", "zero"};
    const auto half = run_real_eval(g, c);
    CHECK(half.value(0.0, "graph", "mean_v_sub") < static_cast<double>(g.vertex_count()));
    CHECK(half.config.kind == ExperimentKind::RealEval);
    c.r = 0.0;
    CHECK_THROWS_AS(run_real_eval(g, c), DomainError);
}

TEST_CASE("trace evaluation") {
    std::istringstream in("1 a b\n2 b c\n2 c c\n3 a c\n4 c d\n5 d e\n");
    const Trace trace = parse_trace(in);
    ExperimentConfig c;
    c.sizes = {0.5, 3.0, 5.0};
    c.final_time = 5.0;
    c.estimators = {"nsvr", "cr", "zero"};
    const auto t = run_trace_eval(trace, c);
    CHECK(t.find(0.5, "graph", "v_count") == nullptr);
    CHECK(t.notices.size() == 1);
    CHECK(t.value(3.0, "graph", "v_count") == 3.0);
    CHECK(t.value(3.0, "graph", "e_count") == 4.0);
    CHECK(t.value(3.0, "graph", "truth") == 5.0);
    for (const auto* est : {"nsvr", "cr", "zero"}) CHECK(t.value(5.0, est, "prediction") == 5.0);
    // zero estimate: (5/3)^2 * 3 non-loop edges
    CHECK(t.value(3.0, "zero", "prediction") == doctest::Approx(25.0 / 3.0));
    c.final_time = 4.0;
    CHECK_THROWS_AS(run_trace_eval(trace, c), DomainError);
}

TEST_CASE("presets and validation") {
    CHECK(preset_replicates(Preset::Full, ExperimentKind::RiskTable) == 10000);
    CHECK(preset_replicates(Preset::Ci, ExperimentKind::SpeciesTable) == 500);
    CHECK(parse_preset("ci") == Preset::Ci);
    CHECK_THROWS_AS(parse_preset("fast"), DomainError);
    auto c = risk_config();
    c.kind = ExperimentKind::SpeciesTable;
    CHECK_THROWS_AS(run_risk_table(c), DomainError);
    c = risk_config();
    c.estimators = {"bogus"};
    CHECK_THROWS_AS(run_risk_table(c), ReplicateFailure);
}
