#ifndef GRAPHEX_EXPERIMENTS_HPP
#define GRAPHEX_EXPERIMENTS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "graphex/graph.hpp"
#include "graphex/io.hpp"
#include "graphex/models.hpp"
#include "graphex/parallel.hpp"
#include "graphex/results.hpp"

namespace graphex {

enum class Preset { Full, Ci };

/// Replicate counts: risk tables 10000 (full) / 2000 (ci), species tables
/// 1000 / 500.
std::size_t preset_replicates(Preset preset, ExperimentKind kind);
Preset parse_preset(std::string_view key);

/// Root-mean-square error of sigma_hat per size and estimator (`nsvr`,
/// `cr`, `zero`, `oracle`), plus mean |V| and |E| rows under estimator
/// `graph`. Metrics: `rmse`, `mean_sigma_hat`, `mean_v`, `mean_e`.
ResultTable run_risk_table(const ExperimentConfig& config);

/// Per beta: sample G_beta, p-sample it at 1/beta_ratio to obtain G_alpha,
/// predict the non-loop edge count of G_beta from G_alpha and |V_beta|.
/// Metrics: `nrmse` per estimator; `mean_v_beta`, `mean_e_beta`,
/// `mean_v_alpha`, `mean_e_alpha` under `graph`.
ResultTable run_species_table(const ExperimentConfig& config);

/// Treats `graph` as G_beta and r-samples it `config.replicates` times.
/// Metrics: `nrmse` per estimator; `mean_v_sub`, `mean_e_sub`, and
/// `undefined_np` (replicates with N_p < 1) under `graph`.
ResultTable run_real_eval(const UndirectedGraph& graph, const ExperimentConfig& config);

/// Deterministic evaluation per snapshot time in config.sizes against the
/// vertex count at config.final_time. Metrics per snapshot: `prediction`
/// and `sigma_hat` per estimator; `v_count`, `e_count`, `truth` under
/// `graph`.
ResultTable run_trace_eval(const Trace& trace, const ExperimentConfig& config);

}  // namespace graphex

#endif  // GRAPHEX_EXPERIMENTS_HPP
