#include "maoea/harness.hpp"

#include <algorithm>
#include <cmath>

#include "maoea/nadir.hpp"
#include "maoea/problems.hpp"

namespace maoea {

namespace {
// Fixed seed for the shared IGD evaluation front so every run of a cell is
// scored against the same sample.
constexpr std::uint64_t kIgdFrontSeed = 0x49474446524F4E54ULL;
constexpr int kIgdFrontPoints = 5000;
}  // namespace

double median_of(std::vector<double> values) {
    if (values.empty()) throw ContractError("median of empty sample");
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    return (n % 2 == 1) ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

double mean_of(const std::vector<double>& values) {
    if (values.empty()) throw ContractError("mean of empty sample");
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum / static_cast<double>(values.size());
}

double stddev_of(const std::vector<double>& values) {
    if (values.size() < 2) return 0.0;
    const double mu = mean_of(values);
    double acc = 0.0;
    for (double v : values) acc += (v - mu) * (v - mu);
    return std::sqrt(acc / static_cast<double>(values.size() - 1));
}

ExperimentSpec ExperimentSpec::from_json(const json& j) {
    ExperimentSpec spec;
    if (!j.contains("problems") || !j.at("problems").is_array() || j.at("problems").empty())
        throw ConfigError("experiment spec: 'problems' must be a non-empty array");
    for (const auto& cell : j.at("problems")) {
        ExperimentCell c;
        c.problem_id = cell.at("id").get<std::string>();
        c.m = cell.at("m").get<int>();
        parse_benchmark_id(c.problem_id, c.m);
        spec.problems.push_back(c);
    }
    spec.runs_per_cell = j.value("runs", spec.runs_per_cell);
    if (spec.runs_per_cell < 1) throw ConfigError("experiment spec: runs must be >= 1");
    if (j.contains("budget")) {
        const auto& b = j.at("budget");
        if (b.is_number()) {
            spec.default_budget = b.get<std::uint64_t>();
        } else if (b.is_object()) {
            for (const auto& [key, value] : b.items())
                spec.budget_by_m[std::stoi(key)] = value.get<std::uint64_t>();
        } else {
            throw ConfigError("experiment spec: 'budget' must be a number or an m->budget map");
        }
    }
    spec.base_seed = j.value("seed", spec.base_seed);
    if (j.contains("engine")) spec.engine_overrides = j.at("engine");
    if (!j.contains("out")) throw ConfigError("experiment spec: 'out' directory is required");
    spec.out_dir = j.at("out").get<std::string>();
    spec.hv_samples = j.value("hv_samples", spec.hv_samples);
    return spec;
}

std::uint64_t ExperimentSpec::budget_for(int m) const {
    if (auto it = budget_by_m.find(m); it != budget_by_m.end()) return it->second;
    if (default_budget == 0)
        throw ConfigError("experiment spec: no budget for m=" + std::to_string(m));
    return default_budget;
}

namespace {

struct RunOutcome {
    std::optional<double> igd_value;
    double hv_norm = 0.0;
};

RunOutcome score_run(const RunRecord& record, const BenchmarkSpec& spec,
                     const Matrix& igd_front, std::uint64_t hv_samples) {
    RunOutcome outcome;
    const Matrix front = objectives_of(record.final_population);
    if (igd_front.rows > 0) outcome.igd_value = igd(igd_front, front, false);
    outcome.hv_norm =
        hv_normalized(front, spec.id(), spec.m, hv_samples).value;
    return outcome;
}

char mark_of(double p, double median_engine, double median_base, bool smaller_is_better) {
    if (p >= 0.05) return '=';
    const bool engine_better =
        smaller_is_better ? median_engine < median_base : median_engine > median_base;
    return engine_better ? '+' : '-';
}

}  // namespace

SummaryTable run_experiment(const ExperimentSpec& spec) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(spec.out_dir, ec);
    if (ec) throw IoError("cannot create output directory " + spec.out_dir.string());
    // probe writability before any run
    const fs::path probe = spec.out_dir / ".writable";
    write_text_file(probe, "ok\n");
    fs::remove(probe, ec);

    SummaryTable summary;
    summary.header = {"problem", "m",      "algorithm", "indicator", "mean",
                      "std",     "median", "p_value",   "mark"};

    for (const auto& cell : spec.problems) {
        const BenchmarkSpec bench = parse_benchmark_id(cell.problem_id, cell.m);
        const std::uint64_t budget = spec.budget_for(cell.m);
        const fs::path cell_dir =
            spec.out_dir / (cell.problem_id + "_m" + std::to_string(cell.m));
        fs::create_directories(cell_dir, ec);
        if (ec) throw IoError("cannot create cell directory " + cell_dir.string());

        Matrix igd_front;
        if (has_true_front(bench)) {
            RandomSource front_rng(kIgdFrontSeed);
            igd_front = sample_true_front(bench, kIgdFrontPoints, front_rng);
        }

        EngineConfig base;
        base.problem_id = cell.problem_id;
        base.m = cell.m;
        base.total_eval_budget = budget;
        apply_engine_overrides(base, spec.engine_overrides);
        base.problem_id = cell.problem_id;  // cell identity wins over overrides
        base.m = cell.m;
        base.total_eval_budget = budget;

        struct PerRun {
            RunOutcome engine, baseline;
            std::uint64_t seed;
        };
        std::vector<PerRun> results(spec.runs_per_cell);

        // Runs are independent; record files are per-run, the summary is
        // assembled by the coordinator afterwards.
#pragma omp parallel for schedule(dynamic)
        for (int r = 0; r < spec.runs_per_cell; ++r) {
            EngineConfig config = base;
            config.seed = spec.base_seed + static_cast<std::uint64_t>(r);
            results[r].seed = config.seed;

            RunRecord engine_record = run(config);
            RunRecord baseline_record = run_random_baseline(config);
            results[r].engine = score_run(engine_record, bench, igd_front, spec.hv_samples);
            results[r].baseline = score_run(baseline_record, bench, igd_front, spec.hv_samples);

            const json je = engine_record;
            const json jb = baseline_record;
            write_text_file(cell_dir / ("engine_run" + std::to_string(r) + ".json"),
                            je.dump(1) + "\n");
            write_text_file(cell_dir / ("baseline_run" + std::to_string(r) + ".json"),
                            jb.dump(1) + "\n");
        }

        CsvTable cell_csv;
        cell_csv.header = {"run", "seed", "algorithm", "igd", "hv_normalized"};
        for (int r = 0; r < spec.runs_per_cell; ++r) {
            auto row_of = [&](const char* algo, const RunOutcome& o) {
                return std::vector<std::string>{
                    std::to_string(r), std::to_string(results[r].seed), algo,
                    o.igd_value ? fmt_g(*o.igd_value, 17) : std::string{},
                    fmt_g(o.hv_norm, 17)};
            };
            cell_csv.rows.push_back(row_of("maoea-igd", results[r].engine));
            cell_csv.rows.push_back(row_of("random-baseline", results[r].baseline));
        }
        write_csv(cell_dir / "cell.csv", cell_csv);

        // indicator summaries + rank-sum marks against the baseline
        struct Samples {
            std::vector<double> engine, baseline;
        };
        std::map<std::string, Samples> by_indicator;
        for (int r = 0; r < spec.runs_per_cell; ++r) {
            if (results[r].engine.igd_value) {
                by_indicator["igd"].engine.push_back(*results[r].engine.igd_value);
                by_indicator["igd"].baseline.push_back(*results[r].baseline.igd_value);
            }
            by_indicator["hv_normalized"].engine.push_back(results[r].engine.hv_norm);
            by_indicator["hv_normalized"].baseline.push_back(results[r].baseline.hv_norm);
        }
        for (const auto& [indicator, samples] : by_indicator) {
            const bool smaller_better = indicator == "igd";
            std::string p_text, mark_text;
            if (samples.engine.size() >= 2 && samples.baseline.size() >= 2) {
                const auto rs = rank_sum_test(samples.engine, samples.baseline);
                p_text = fmt_g(rs.p_value, 17);
                mark_text = std::string(1, mark_of(rs.p_value, median_of(samples.engine),
                                                   median_of(samples.baseline), smaller_better));
            }
            auto emit = [&](const char* algo, const std::vector<double>& v, bool with_mark) {
                summary.rows.push_back({cell.problem_id, std::to_string(cell.m), algo, indicator,
                                        fmt_g(mean_of(v), 17), fmt_g(stddev_of(v), 17),
                                        fmt_g(median_of(v), 17), with_mark ? p_text : "",
                                        with_mark ? mark_text : ""});
            };
            emit("maoea-igd", samples.engine, true);
            emit("random-baseline", samples.baseline, false);
        }
    }

    write_csv(spec.out_dir / "summary.csv", summary);
    return summary;
}

CsvTable nadir_experiment(const std::vector<std::string>& problem_ids,
                          const std::vector<int>& ms, int runs, std::uint64_t base_seed,
                          std::uint64_t eval_cap) {
    if (runs < 1) throw ConfigError("nadir_experiment: runs must be >= 1");
    CsvTable table;
    table.header = {"problem", "m", "run", "seed", "evaluations", "error", "exhausted"};

    struct Task {
        std::string id;
        int m;
        int run;
    };
    std::vector<Task> tasks;
    for (const auto& id : problem_ids) {
        for (int m : ms) {
            const BenchmarkSpec spec = parse_benchmark_id(id, m);
            if (!has_true_nadir(spec))
                throw UnsupportedError("nadir_experiment: no published nadir for " + id);
            for (int r = 0; r < runs; ++r) tasks.push_back({id, m, r});
        }
    }

    std::vector<std::vector<std::string>> rows(tasks.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t t = 0; t < static_cast<std::ptrdiff_t>(tasks.size()); ++t) {
        const Task& task = tasks[t];
        const auto problem = make_problem(task.id, task.m);
        DnpeConfig cfg = DnpeConfig::benchmark_defaults(task.m);
        cfg.per_extreme_eval_budget = std::max<std::uint64_t>(eval_cap / task.m, 1);
        const std::uint64_t seed = base_seed + static_cast<std::uint64_t>(task.run);
        RandomSource rng(seed);
        const NadirReport report = run_dnpe_serial(*problem, cfg, rng);
        rows[t] = {task.id,
                   std::to_string(task.m),
                   std::to_string(task.run),
                   std::to_string(seed),
                   std::to_string(report.evaluations),
                   report.error ? fmt_g(*report.error, 17) : std::string{},
                   report.axes_converged == task.m ? "0" : "1"};
    }
    table.rows = std::move(rows);
    return table;
}

CellComparison compare_cells(const CsvTable& a, const CsvTable& b, const std::string& metric,
                             const std::string& algo_a, const std::string& algo_b,
                             bool smaller_is_better) {
    auto column_of = [&](const CsvTable& t, const std::string& algo) {
        std::size_t metric_col = t.header.size(), algo_col = t.header.size();
        for (std::size_t c = 0; c < t.header.size(); ++c) {
            if (t.header[c] == metric) metric_col = c;
            if (t.header[c] == "algorithm") algo_col = c;
        }
        if (metric_col == t.header.size())
            throw ConfigError("compare: metric column '" + metric + "' not found");
        std::vector<double> values;
        for (const auto& row : t.rows) {
            if (algo_col < t.header.size() && row[algo_col] != algo) continue;
            if (row[metric_col].empty()) continue;
            values.push_back(parse_double(row[metric_col]));
        }
        if (values.size() < 2)
            throw ConfigError("compare: fewer than 2 '" + algo + "' rows with metric '" +
                              metric + "'");
        return values;
    };

    const auto va = column_of(a, algo_a);
    const auto vb = column_of(b, algo_b);
    const auto rs = rank_sum_test(va, vb);

    CellComparison cmp;
    cmp.u_statistic = rs.u_statistic;
    cmp.p_value = rs.p_value;
    cmp.median_a = median_of(va);
    cmp.median_b = median_of(vb);
    cmp.mark = mark_of(rs.p_value, cmp.median_a, cmp.median_b, smaller_is_better);
    return cmp;
}

}  // namespace maoea
