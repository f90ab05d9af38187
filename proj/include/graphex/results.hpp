#ifndef GRAPHEX_RESULTS_HPP
#define GRAPHEX_RESULTS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace graphex {

inline constexpr const char* kVersion = "0.1.0";

enum class ExperimentKind { RiskTable, SpeciesTable, RealEval, TraceEval };

std::string experiment_kind_key(ExperimentKind kind);

struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::RiskTable;
    std::string model = "ggp-cf";
    std::optional<double> sigma = 0.5;
    /// alpha for risk tables, beta for species tables, snapshot times for traces.
    std::vector<double> sizes;
    /// Species tables observe G_alpha with alpha = beta / beta_ratio.
    double beta_ratio = 2.0;
    std::vector<std::string> estimators{"nsvr", "cr"};
    std::size_t replicates = 100;
    std::uint64_t seed = 1;
    double budget = 1e-3;
    double p = 0.5;
    /// Subsampling rate for real-graph evaluation.
    double r = 0.5;
    /// Final time for trace evaluation.
    double final_time = 0.0;
    std::string input;
    std::string output;
    bool serial = false;
};

/// One number of a result table; `size` is alpha, beta, a snapshot time or
/// 0 for single-graph evaluations.
struct ResultRow {
    double size = 0.0;
    std::string estimator;
    std::string metric;
    double value = 0.0;
    double stderr_value = 0.0;
    std::size_t n_reps = 0;

    bool operator==(const ResultRow&) const = default;
};

struct ResultTable {
    ExperimentConfig config;
    std::vector<ResultRow> rows;
    std::string version = kVersion;
    std::vector<std::string> notices;

    /// First row matching all three keys, or nullptr.
    const ResultRow* find(double size, const std::string& estimator, const std::string& metric) const;
    double value(double size, const std::string& estimator, const std::string& metric) const;
};

}  // namespace graphex

#endif  // GRAPHEX_RESULTS_HPP
