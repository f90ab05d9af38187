#include "graphex/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "graphex/error.hpp"
#include "graphex/estimators.hpp"
#include "graphex/prediction.hpp"
#include "graphex/sampler.hpp"

namespace graphex {

std::string experiment_kind_key(ExperimentKind kind) {
    switch (kind) {
        case ExperimentKind::RiskTable: return "risk-table";
        case ExperimentKind::SpeciesTable: return "species-table";
        case ExperimentKind::RealEval: return "real-eval";
        case ExperimentKind::TraceEval: return "trace-eval";
    }
    return "unknown";
}

const ResultRow* ResultTable::find(double size, const std::string& estimator, const std::string& metric) const {
    for (const auto& r : rows)
        if (r.size == size && r.estimator == estimator && r.metric == metric) return &r;
    return nullptr;
}

double ResultTable::value(double size, const std::string& estimator, const std::string& metric) const {
    const ResultRow* r = find(size, estimator, metric);
    if (!r) throw DomainError("no result row for " + estimator + "/" + metric);
    return r->value;
}

std::size_t preset_replicates(Preset preset, ExperimentKind kind) {
    const bool risk = kind == ExperimentKind::RiskTable;
    if (preset == Preset::Full) return risk ? 10000 : 1000;
    return risk ? 2000 : 500;
}

Preset parse_preset(std::string_view key) {
    if (key == "full") return Preset::Full;
    if (key == "ci") return Preset::Ci;
    throw DomainError("unknown preset '" + std::string(key) + "'");
}

namespace {

struct Moments {
    double mean = 0.0;
    double stderr_value = 0.0;
};

Moments moments(const std::vector<double>& xs) {
    const double n = static_cast<double>(xs.size());
    Moments m;
    m.mean = pairwise_sum(xs) / n;
    if (xs.size() > 1) {
        std::vector<double> dev(xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i) dev[i] = (xs[i] - m.mean) * (xs[i] - m.mean);
        m.stderr_value = std::sqrt(pairwise_sum(dev) / (n - 1.0) / n);
    }
    return m;
}

// sqrt of a mean of squares, with a delta-method standard error.
ResultRow root_mean_row(double size, const std::string& est, const std::string& metric,
                        const std::vector<double>& squares) {
    const Moments m = moments(squares);
    const double root = std::sqrt(m.mean);
    return {size, est, metric, root, root > 0.0 ? m.stderr_value / (2.0 * root) : 0.0, squares.size()};
}

ResultRow mean_row(double size, const std::string& est, const std::string& metric, const std::vector<double>& xs) {
    const Moments m = moments(xs);
    return {size, est, metric, m.mean, m.stderr_value, xs.size()};
}

Schedule schedule_of(const ExperimentConfig& c) { return c.serial ? Schedule::Serial : Schedule::Parallel; }

double sigma_estimate(const std::string& est, const UndirectedGraph& g, double p, double truth) {
    if (est == "nsvr") return estimate_sigma_nsvr(g, p).sigma_hat;
    if (est == "cr") return estimate_sigma_cr(g);
    if (est == "zero") return 0.0;
    if (est == "oracle") return truth;
    throw DomainError("unknown estimator '" + est + "'");
}

template <class T, class Task>
std::vector<T> replicate_grid(const ExperimentConfig& c, std::size_t grid, double size, const Task& task) {
    try {
        return run_replicates<T>(c.replicates, task, schedule_of(c));
    } catch (const ReplicateFailure& f) {
        throw ReplicateFailure(f.replicate(), "seed " + std::to_string(c.seed) + ", grid " + std::to_string(grid) +
                                                  " (size " + format_double(size) + "): " + f.cause());
    }
}

struct SampleOutcome {
    std::vector<double> values;  // one per estimator
    double v = 0.0;
    double e = 0.0;
    double v2 = 0.0;
    double e2 = 0.0;
};

}  // namespace

ResultTable run_risk_table(const ExperimentConfig& config) {
    if (config.kind != ExperimentKind::RiskTable) throw DomainError("config is not a risk-table experiment");
    if (config.replicates < 1) throw DomainError("replicate count must be at least 1");
    const ModelSpec model = parse_model(config.model, config.sigma);
    ResultTable table;
    table.config = config;
    for (std::size_t g = 0; g < config.sizes.size(); ++g) {
        const double size = config.sizes[g];
        if (!(size > 0.0)) throw DomainError("sizes must be positive");
        auto task = [&](std::size_t i) {
            Rng rng = Rng::derive(config.seed, g, i, StreamTag::sample);
            const UndirectedGraph graph = sample_unipartite(model, size, config.budget, rng);
            SampleOutcome out;
            for (const auto& est : config.estimators) {
                const double d = sigma_estimate(est, graph, config.p, model.sigma) - model.sigma;
                out.values.push_back(d * d);
            }
            out.v = static_cast<double>(graph.vertex_count());
            out.e = static_cast<double>(graph.edge_count());
            return out;
        };
        const auto reps = replicate_grid<SampleOutcome>(config, g, size, task);
        for (std::size_t k = 0; k < config.estimators.size(); ++k) {
            std::vector<double> sq(reps.size());
            for (std::size_t i = 0; i < reps.size(); ++i) sq[i] = reps[i].values[k];
            table.rows.push_back(root_mean_row(size, config.estimators[k], "rmse", sq));
        }
        std::vector<double> v(reps.size()), e(reps.size());
        for (std::size_t i = 0; i < reps.size(); ++i) {
            v[i] = reps[i].v;
            e[i] = reps[i].e;
        }
        table.rows.push_back(mean_row(size, "graph", "mean_v", v));
        table.rows.push_back(mean_row(size, "graph", "mean_e", e));
    }
    return table;
}

ResultTable run_species_table(const ExperimentConfig& config) {
    if (config.kind != ExperimentKind::SpeciesTable) throw DomainError("config is not a species-table experiment");
    if (config.replicates < 1) throw DomainError("replicate count must be at least 1");
    if (!(config.beta_ratio > 1.0)) throw DomainError("beta must exceed alpha");
    const ModelSpec model = parse_model(config.model, config.sigma);
    const double r = 1.0 / config.beta_ratio;
    ResultTable table;
    table.config = config;
    for (std::size_t g = 0; g < config.sizes.size(); ++g) {
        const double beta = config.sizes[g];
        if (!(beta > 0.0)) throw DomainError("sizes must be positive");
        auto task = [&](std::size_t i) {
            Rng rng = Rng::derive(config.seed, g, i, StreamTag::sample);
            const UndirectedGraph big = sample_unipartite(model, beta, config.budget, rng);
            Rng sub_rng = Rng::derive(config.seed, g, i, StreamTag::subsample);
            const UndirectedGraph small = p_sample(big, r, sub_rng);
            const double truth = static_cast<double>(big.edge_count() - big.self_loop_count());
            if (!(truth > 0.0)) throw NumericalError("sampled G_beta has no non-loop edges");
            const auto v_beta = static_cast<double>(big.vertex_count());
            SampleOutcome out;
            for (const auto& est : config.estimators) {
                const double sigma_hat = sigma_estimate(est, small, config.p, model.sigma);
                const double rel = (predict_edges(small, v_beta, sigma_hat) - truth) / truth;
                out.values.push_back(rel * rel);
            }
            out.v = v_beta;
            out.e = static_cast<double>(big.edge_count());
            out.v2 = static_cast<double>(small.vertex_count());
            out.e2 = static_cast<double>(small.edge_count());
            return out;
        };
        const auto reps = replicate_grid<SampleOutcome>(config, g, beta, task);
        for (std::size_t k = 0; k < config.estimators.size(); ++k) {
            std::vector<double> sq(reps.size());
            for (std::size_t i = 0; i < reps.size(); ++i) sq[i] = reps[i].values[k];
            table.rows.push_back(root_mean_row(beta, config.estimators[k], "nrmse", sq));
        }
        std::vector<double> v(reps.size()), e(reps.size()), v2(reps.size()), e2(reps.size());
        for (std::size_t i = 0; i < reps.size(); ++i) {
            v[i] = reps[i].v;
            e[i] = reps[i].e;
            v2[i] = reps[i].v2;
            e2[i] = reps[i].e2;
        }
        table.rows.push_back(mean_row(beta, "graph", "mean_v_beta", v));
        table.rows.push_back(mean_row(beta, "graph", "mean_e_beta", e));
        table.rows.push_back(mean_row(beta, "graph", "mean_v_alpha", v2));
        table.rows.push_back(mean_row(beta, "graph", "mean_e_alpha", e2));
    }
    return table;
}

ResultTable run_real_eval(const UndirectedGraph& graph, const ExperimentConfig& config) {
    if (graph.empty()) throw DomainError("real-graph evaluation needs a non-empty graph");
    if (config.replicates < 1) throw DomainError("replicate count must be at least 1");
    if (!(config.r > 0.0 && config.r <= 1.0)) throw DomainError("r must lie in (0,1]");
    const double truth = static_cast<double>(graph.edge_count() - graph.self_loop_count());
    if (!(truth > 0.0)) throw DomainError("graph has no non-loop edges");
    const auto v_beta = static_cast<double>(graph.vertex_count());
    ResultTable table;
    table.config = config;
    table.config.kind = ExperimentKind::RealEval;
    auto task = [&](std::size_t i) {
        Rng rng = Rng::derive(config.seed, 0, i, StreamTag::resample);
        const UndirectedGraph sub = config.r == 1.0 ? graph : p_sample(graph, config.r, rng);
        SampleOutcome out;
        for (const auto& est : config.estimators) {
            const double sigma_hat = sigma_estimate(est, sub, config.p, 0.0);
            const double rel = (predict_edges(sub, v_beta, sigma_hat) - truth) / truth;
            out.values.push_back(rel * rel);
        }
        out.v = static_cast<double>(sub.vertex_count());
        out.e = static_cast<double>(sub.edge_count());
        out.v2 = count_N_p(sub, config.p) < 1.0 ? 1.0 : 0.0;
        return out;
    };
    const auto reps = replicate_grid<SampleOutcome>(config, 0, 0.0, task);
    for (std::size_t k = 0; k < config.estimators.size(); ++k) {
        std::vector<double> sq(reps.size());
        for (std::size_t i = 0; i < reps.size(); ++i) sq[i] = reps[i].values[k];
        table.rows.push_back(root_mean_row(0.0, config.estimators[k], "nrmse", sq));
    }
    std::vector<double> v(reps.size()), e(reps.size()), undefined(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i) {
        v[i] = reps[i].v;
        e[i] = reps[i].e;
        undefined[i] = reps[i].v2;
    }
    table.rows.push_back(mean_row(0.0, "graph", "mean_v_sub", v));
    table.rows.push_back(mean_row(0.0, "graph", "mean_e_sub", e));
    const double n_undefined = pairwise_sum(undefined);
    table.rows.push_back({0.0, "graph", "undefined_np", n_undefined, 0.0, reps.size()});
    if (n_undefined > 0.0)
        table.notices.push_back(std::to_string(static_cast<long long>(n_undefined)) +
                                " replicates had N_p < 1; sigma_hat = 0 was used");
    return table;
}

ResultTable run_trace_eval(const Trace& trace, const ExperimentConfig& config) {
    ResultTable table;
    table.config = config;
    table.config.kind = ExperimentKind::TraceEval;
    double max_time = 0.0;
    for (const double t : config.sizes) max_time = std::max(max_time, t);
    if (config.final_time < max_time) throw DomainError("final time precedes a snapshot time");
    const UndirectedGraph final_graph = snapshot(trace, config.final_time);
    if (final_graph.empty()) throw DomainError("trace holds no edges up to the final time");
    const auto v_final = static_cast<double>(final_graph.vertex_count());
    const auto truth = static_cast<double>(final_graph.edge_count() - final_graph.self_loop_count());
    for (const double t : config.sizes) {
        const UndirectedGraph g = snapshot(trace, t);
        if (g.empty()) {
            table.notices.push_back("snapshot at t=" + format_double(t) + " is empty; row skipped");
            continue;
        }
        table.rows.push_back({t, "graph", "v_count", static_cast<double>(g.vertex_count()), 0.0, 1});
        table.rows.push_back({t, "graph", "e_count", static_cast<double>(g.edge_count()), 0.0, 1});
        table.rows.push_back({t, "graph", "truth", truth, 0.0, 1});
        for (const auto& est : config.estimators) {
            double sigma_hat = 0.0;
            try {
                sigma_hat = sigma_estimate(est, g, config.p, 0.0);
            } catch (const UndefinedEstimate& e) {
                table.notices.push_back("t=" + format_double(t) + ", " + est + ": " + e.what());
                continue;
            }
            table.rows.push_back({t, est, "sigma_hat", sigma_hat, 0.0, 1});
            table.rows.push_back({t, est, "prediction", predict_edges(g, v_final, sigma_hat), 0.0, 1});
        }
    }
    return table;
}

}  // namespace graphex
