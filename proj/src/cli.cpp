#include "graphex/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "graphex/error.hpp"
#include "graphex/estimators.hpp"
#include "graphex/experiments.hpp"
#include "graphex/io.hpp"
#include "graphex/parallel.hpp"
#include "graphex/sampler.hpp"
#include "graphex/theory.hpp"

namespace graphex {

namespace {

double parse_number(std::string_view text) {
    double v = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size())
        throw DomainError("not a number: '" + std::string(text) + "'");
    return v;
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("GRAPHEX_SEED")) {
        std::uint64_t v = 0;
        const std::string_view s(env);
        const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
        if (res.ec == std::errc() && res.ptr == s.data() + s.size()) return v;
        throw DomainError("GRAPHEX_SEED is not an unsigned integer");
    }
    return 1;
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open '" + path + "'");
    return in;
}

// Writes to `path`, or to `fallback` when path is empty.
template <class Writer>
void emit(const std::string& path, std::ostream& fallback, const Writer& write) {
    if (path.empty()) {
        write(fallback);
        return;
    }
    std::ofstream f(path);
    if (!f) throw ParseError(0, "cannot write '" + path + "'");
    write(f);
}

nlohmann::ordered_json report_json(const EstimateReport& r) {
    nlohmann::ordered_json j = {{"sigma_hat", r.sigma_hat}, {"n1", r.n1},          {"np", r.np},
                                {"p", r.p},                 {"v_count", r.v_count}, {"e_count", r.e_count},
                                {"self_loop_count", r.self_loop_count},            {"clamped", r.clamped}};
    if (r.sigma_clamped) j["sigma_hat_clamped"] = *r.sigma_clamped;
    return j;
}

struct TableOptions {
    std::string model = "ggp-cf";
    std::optional<double> sigma;
    std::string sizes;
    std::string estimators;
    std::optional<std::size_t> reps;
    std::string preset = "ci";
    std::string json;
};

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

}  // namespace

std::vector<double> parse_grid(std::string_view text) {
    std::vector<double> out;
    const auto dots = text.find("..");
    if (dots != std::string_view::npos) {
        const double lo = parse_number(text.substr(0, dots));
        const double hi = parse_number(text.substr(dots + 2));
        if (!(lo > 0.0) || !(hi >= lo)) throw DomainError("range needs 0 < lo <= hi");
        for (double v = lo; v <= hi * (1.0 + 1e-12); v *= 2.0) out.push_back(v);
        return out;
    }
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        if (!item.empty()) out.push_back(parse_number(item));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (out.empty()) throw DomainError("empty grid");
    return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Simulation, estimation and evaluation of graphex random graphs", "graphex"};
    app.require_subcommand(1);
    app.fallthrough();
    int threads = 0;
    app.add_option("--threads", threads, "Worker cap for replicate loops (0: machine default)");

    std::uint64_t seed = 0;
    bool seed_given = false;
    double budget = kDefaultBudget;

    // simulate
    auto* sim = app.add_subcommand("simulate", "Sample a graph and write its edge list");
    std::string sim_model, sim_out;
    std::optional<double> sim_sigma;
    double sim_size = 0.0;
    sim->add_option("--model", sim_model, "dense|almost-dense|sparse-sep|sparse-nonsep|ggp|ggp-cf")->required();
    sim->add_option("--sigma", sim_sigma, "Tail index for the power-law families");
    sim->add_option("--size", sim_size, "Size alpha")->required();
    sim->add_option("--seed", seed, "Seed (default: GRAPHEX_SEED or 1)");
    sim->add_option("--budget", budget, "Expected missed edges");
    sim->add_option("--out", sim_out, "Output edge list (default: stdout)");

    // estimate
    auto* est = app.add_subcommand("estimate", "Estimate the tail index of an edge list");
    std::string est_input, est_kind = "nsvr";
    double est_p = 0.5;
    bool est_clamp = false;
    est->add_option("--input", est_input, "Edge list")->required();
    est->add_option("--p", est_p, "Subsampling level p in (0,1)");
    est->add_option("--estimator", est_kind, "nsvr|cr")->check(CLI::IsMember({"nsvr", "cr"}));
    est->add_flag("--clamp", est_clamp, "Also report sigma_hat clipped to [0,1]");

    // risk-table / species-table
    TableOptions risk, species;
    double beta_ratio = 2.0;
    std::string table_out;
    bool serial = false;
    auto add_table = [&](CLI::App* sub, TableOptions& o, const char* default_est) {
        o.estimators = default_est;
        sub->add_option("--model", o.model, "Model key");
        sub->add_option("--sigma", o.sigma, "Tail index");
        sub->add_option("--sizes", o.sizes, "Grid: a,b,c or lo..hi")->required();
        sub->add_option("--estimators", o.estimators, "Comma-separated: nsvr,cr,zero,oracle");
        sub->add_option("--reps", o.reps, "Replicates (overrides the preset)");
        sub->add_option("--preset", o.preset, "full|ci")->check(CLI::IsMember({"full", "ci"}));
        sub->add_option("--seed", seed, "Base seed");
        sub->add_option("--budget", budget, "Expected missed edges per graph");
        sub->add_option("--out", table_out, "CSV output (default: stdout)");
        sub->add_option("--json", o.json, "JSON output with the full config");
        sub->add_flag("--serial", serial, "Use the serial reference loop");
    };
    auto* risk_cmd = app.add_subcommand("risk-table", "RMSE of tail-index estimators on simulated graphs");
    add_table(risk_cmd, risk, "nsvr,cr");
    auto* species_cmd = app.add_subcommand("species-table", "Unseen-edge prediction risk on simulated graphs");
    add_table(species_cmd, species, "nsvr,zero,oracle");
    species_cmd->add_option("--beta-ratio", beta_ratio, "beta / alpha");

    // real-eval
    auto* real = app.add_subcommand("real-eval", "Prediction risk on a real graph by r-sampling");
    std::string real_input, real_json, real_est = "nsvr,cr,zero";
    double real_r = 0.5;
    std::size_t real_reps = 1000;
    real->add_option("--input", real_input, "Edge list")->required();
    real->add_option("--r", real_r, "Sampling rate in (0,1]");
    real->add_option("--reps", real_reps, "Replicates");
    real->add_option("--seed", seed, "Base seed");
    real->add_option("--estimators", real_est, "Comma-separated estimators");
    real->add_option("--out", table_out, "CSV output (default: stdout)");
    real->add_option("--json", real_json, "JSON output");
    real->add_flag("--serial", serial, "Use the serial reference loop");

    // trace-eval
    auto* trace_cmd = app.add_subcommand("trace-eval", "Edge-count prediction along a timestamped trace");
    std::string trace_input, trace_times, trace_json, trace_est = "nsvr,cr,zero";
    double trace_final = 0.0;
    trace_cmd->add_option("--input", trace_input, "Trace file with lines 't u v'")->required();
    trace_cmd->add_option("--times", trace_times, "Snapshot times t1,t2,...")->required();
    trace_cmd->add_option("--final", trace_final, "Final time")->required();
    trace_cmd->add_option("--estimators", trace_est, "Comma-separated estimators");
    trace_cmd->add_option("--out", table_out, "CSV output (default: stdout)");
    trace_cmd->add_option("--json", trace_json, "JSON output");

    // theory
    auto* theory = app.add_subcommand("theory", "Bias diagnostics from quadrature");
    std::string th_model, th_sizes = "16..4096", th_out;
    std::optional<double> th_sigma;
    double th_p = 0.5;
    theory->add_option("--model", th_model, "Model key")->required();
    theory->add_option("--sigma", th_sigma, "Tail index");
    theory->add_option("--p", th_p, "p in (0,1)");
    theory->add_option("--sizes", th_sizes, "Grid: a,b,c or lo..hi");
    theory->add_option("--out", th_out, "CSV output (default: stdout)");

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        set_thread_cap(threads);
        const auto* seed_opt = app.get_subcommands().front()->get_option_no_throw("--seed");
        seed_given = seed_opt && seed_opt->count() > 0;
        if (!seed_given) seed = default_seed();

        if (*sim) {
            const ModelSpec model = parse_model(sim_model, sim_sigma);
            const UndirectedGraph g = sample_unipartite(model, sim_size, budget, seed);
            emit(sim_out, out, [&](std::ostream& o) { write_edge_list(o, g); });
            return kExitOk;
        }
        if (*est) {
            auto in = open_input(est_input);
            const LabeledGraph parsed = parse_edge_list(in);
            nlohmann::ordered_json doc;
            doc["config"] = {{"input", est_input}, {"p", est_p}, {"estimator", est_kind}, {"clamp", est_clamp}};
            if (est_kind == "nsvr") {
                doc["report"] = report_json(estimate_sigma_nsvr(parsed.graph, est_p, est_clamp));
            } else {
                EstimateReport r;
                r.v_count = parsed.graph.vertex_count();
                r.e_count = parsed.graph.edge_count();
                r.self_loop_count = parsed.graph.self_loop_count();
                r.n1 = count_N_p(parsed.graph, 1.0);
                r.np = count_N_p(parsed.graph, est_p);
                r.p = est_p;
                r.sigma_hat = estimate_sigma_cr(parsed.graph);
                if (est_clamp) {
                    r.clamped = true;
                    r.sigma_clamped = std::clamp(r.sigma_hat, 0.0, 1.0);
                }
                doc["report"] = report_json(r);
            }
            doc["version"] = kVersion;
            out << doc.dump(2) << '\n';
            return kExitOk;
        }
        auto table_config = [&](const TableOptions& o, ExperimentKind kind) {
            ExperimentConfig c;
            c.kind = kind;
            c.model = o.model;
            c.sigma = o.sigma;
            c.sizes = parse_grid(o.sizes);
            c.estimators = split_list(o.estimators);
            c.replicates = o.reps ? *o.reps : preset_replicates(parse_preset(o.preset), kind);
            c.seed = seed;
            c.budget = budget;
            c.output = table_out;
            c.serial = serial;
            c.beta_ratio = beta_ratio;
            return c;
        };
        auto write_table = [&](const ResultTable& t, const std::string& json) {
            emit(table_out, out, [&](std::ostream& o) { write_csv(o, t); });
            if (!json.empty()) emit(json, out, [&](std::ostream& o) { write_json(o, t); });
        };
        if (*risk_cmd) {
            write_table(run_risk_table(table_config(risk, ExperimentKind::RiskTable)), risk.json);
            return kExitOk;
        }
        if (*species_cmd) {
            write_table(run_species_table(table_config(species, ExperimentKind::SpeciesTable)), species.json);
            return kExitOk;
        }
        if (*real) {
            auto in = open_input(real_input);
            const LabeledGraph parsed = parse_edge_list(in);
            ExperimentConfig c;
            c.kind = ExperimentKind::RealEval;
            c.model = "";
            c.sigma.reset();
            c.r = real_r;
            c.replicates = real_reps;
            c.seed = seed;
            c.estimators = split_list(real_est);
            c.input = real_input;
            c.output = table_out;
            c.serial = serial;
            write_table(run_real_eval(parsed.graph, c), real_json);
            return kExitOk;
        }
        if (*trace_cmd) {
            auto in = open_input(trace_input);
            const Trace trace = parse_trace(in);
            ExperimentConfig c;
            c.kind = ExperimentKind::TraceEval;
            c.model = "";
            c.sigma.reset();
            c.sizes = parse_grid(trace_times);
            c.final_time = trace_final;
            c.estimators = split_list(trace_est);
            c.input = trace_input;
            c.output = table_out;
            const ResultTable t = run_trace_eval(trace, c);
            for (const auto& n : t.notices) err << "notice: " << n << '\n';
            write_table(t, trace_json);
            return kExitOk;
        }
        if (*theory) {
            const ModelSpec model = parse_model(th_model, th_sigma);
            const BiasDiagnostics d = gamma_diagnostic(model, th_p, parse_grid(th_sizes));
            ResultTable t;
            t.config.model = th_model;
            t.config.sigma = th_sigma;
            t.config.sizes = d.sizes;
            t.config.p = th_p;
            for (std::size_t i = 0; i < d.sizes.size(); ++i) {
                t.rows.push_back({d.sizes[i], "theory", "gamma", d.gamma_values[i], 0.0, 0});
                t.rows.push_back({d.sizes[i], "theory", "bias", d.bias_values[i], 0.0, 0});
            }
            t.rows.push_back({0.0, "theory", "slope", d.slope, 0.0, 0});
            emit(th_out, out, [&](std::ostream& o) { write_csv(o, t); });
            return kExitOk;
        }
    } catch (const graphex::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const UndefinedEstimate& e) {
        err << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const NumericalError& e) {
        err << "numerical error: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const ReplicateFailure& e) {
        err << "error: " << e.what() << '\n';
        return kExitNumerical;
    }
    return kExitUsage;
}

}  // namespace graphex
