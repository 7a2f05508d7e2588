#pragma once

#include <filesystem>

#include "maoea/engine.hpp"
#include "maoea/io.hpp"
#include "maoea/metrics.hpp"

namespace maoea {

struct ExperimentCell {
    std::string problem_id;
    int m = 0;
};

struct ExperimentSpec {
    std::vector<ExperimentCell> problems;
    int runs_per_cell = 30;
    std::uint64_t default_budget = 0;           // used when no per-m entry exists
    std::map<int, std::uint64_t> budget_by_m;   // optional per-m schedule
    std::uint64_t base_seed = 0;                // run r uses base_seed + r
    json engine_overrides = json::object();     // partial EngineConfig
    std::filesystem::path out_dir;
    std::uint64_t hv_samples = 100000;  // Monte Carlo HV draws when m > 8

    static ExperimentSpec from_json(const json& j);
    std::uint64_t budget_for(int m) const;
};

/// Summary rows: problem, m, algorithm, indicator, mean, std, median and the
/// rank-sum p-value plus the +/=/- mark against the baseline (engine rows).
using SummaryTable = CsvTable;

/// Run every cell runs_per_cell times for both the engine and the random
/// baseline. Writes one RunRecord JSON per run, one CSV per cell and a
/// summary CSV; returns the summary. Deterministic given base_seed.
SummaryTable run_experiment(const ExperimentSpec& spec);

/// Nadir estimation benchmark: for each supported (problem, m) run DNPE under
/// the per-axis stop rule (error 0.01/m, budget cap/m evaluations) and record
/// evaluations used, the final error E and whether the cap was exhausted.
CsvTable nadir_experiment(const std::vector<std::string>& problem_ids,
                          const std::vector<int>& ms, int runs, std::uint64_t base_seed,
                          std::uint64_t eval_cap = 100000);

/// Rank-sum comparison of one indicator column between two cell CSVs.
struct CellComparison {
    double u_statistic = 0.0;
    double p_value = 1.0;
    double median_a = 0.0;
    double median_b = 0.0;
    char mark = '=';  // '+' a better, '-' a worse at the 5% level
};
CellComparison compare_cells(const CsvTable& a, const CsvTable& b, const std::string& metric,
                             const std::string& algo_a, const std::string& algo_b,
                             bool smaller_is_better);

double median_of(std::vector<double> values);
double mean_of(const std::vector<double>& values);
double stddev_of(const std::vector<double>& values);

}  // namespace maoea
