// Command-line front end: reference-point generation, nadir estimation,
// quality indicators, single optimization runs and experiment orchestration.
#include <filesystem>
#include <iostream>

#include "CLI11.hpp"
#include "maoea/harness.hpp"
#include "maoea/metrics.hpp"
#include "maoea/nadir.hpp"
#include "maoea/problems.hpp"
#include "maoea/refpoints.hpp"

namespace fs = std::filesystem;
using namespace maoea;

namespace {

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream in(text);
    std::string field;
    while (std::getline(in, field, ',')) out.push_back(std::stoi(field));
    return out;
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream in(text);
    std::string field;
    while (std::getline(in, field, ',')) out.push_back(parse_double(field));
    return out;
}

std::vector<std::string> parse_string_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream in(text);
    std::string field;
    while (std::getline(in, field, ',')) out.push_back(field);
    return out;
}

int run_cli(int argc, char** argv) {
    CLI::App app{"MaOEA/IGD optimization library and benchmark harness"};
    app.require_subcommand(1);

    // ---- refpoints ----
    auto* sc_ref = app.add_subcommand("refpoints", "Generate structured reference points");
    int ref_m = 0;
    std::string ref_divisions, ref_ideal, ref_nadir, ref_out;
    sc_ref->add_option("--m", ref_m, "objective count")->required();
    sc_ref->add_option("--divisions", ref_divisions, "outer[,inner] lattice divisions")->required();
    sc_ref->add_option("--ideal", ref_ideal, "ideal point (comma-separated)");
    sc_ref->add_option("--nadir", ref_nadir, "nadir point (comma-separated)");
    sc_ref->add_option("--out", ref_out, "output path (one point per line)")->required();

    // ---- nadir ----
    auto* sc_nadir = app.add_subcommand("nadir", "Estimate the nadir point by DNPE");
    std::string nadir_problem, nadir_out;
    int nadir_m = 0;
    double nadir_lambda = 100.0;
    std::uint64_t nadir_budget = 100000, nadir_seed = 0;
    sc_nadir->add_option("--problem", nadir_problem, "benchmark id")->required();
    sc_nadir->add_option("--m", nadir_m, "objective count")->required();
    sc_nadir->add_option("--lambda", nadir_lambda, "off-axis weight (default 100)");
    sc_nadir->add_option("--budget", nadir_budget, "total evaluation cap (default 100000)");
    sc_nadir->add_option("--seed", nadir_seed, "random seed")->required();
    sc_nadir->add_option("--out", nadir_out, "output JSON path")->required();

    // ---- metric ----
    auto* sc_metric = app.add_subcommand("metric", "Compute a quality indicator");
    std::string metric_kind, metric_front, metric_reference;
    std::uint64_t metric_samples = 0, metric_seed = 0;
    sc_metric->add_option("--kind", metric_kind, "igd | igdplus | hv")->required();
    sc_metric->add_option("--front", metric_front, "front points CSV")->required();
    sc_metric
        ->add_option("--reference", metric_reference,
                     "reference points CSV (single row for hv)")
        ->required();
    sc_metric->add_option("--samples", metric_samples, "Monte Carlo samples (hv only)");
    sc_metric->add_option("--seed", metric_seed, "Monte Carlo seed (hv only)");

    // ---- run ----
    auto* sc_run = app.add_subcommand("run", "One optimization run");
    std::string run_problem, run_out, run_divisions, run_algorithm = "maoea-igd";
    int run_m = 0;
    std::uint64_t run_budget = 0, run_seed = 0;
    sc_run->add_option("--problem", run_problem, "benchmark id")->required();
    sc_run->add_option("--m", run_m, "objective count")->required();
    sc_run->add_option("--budget", run_budget, "total function evaluations")->required();
    sc_run->add_option("--seed", run_seed, "random seed")->required();
    sc_run->add_option("--out", run_out, "output directory")->required();
    sc_run->add_option("--divisions", run_divisions, "outer[,inner] lattice divisions");
    sc_run->add_option("--algorithm", run_algorithm, "maoea-igd | baseline");

    // ---- experiment ----
    auto* sc_exp = app.add_subcommand("experiment", "Multi-seed experiment from a JSON spec");
    std::string exp_spec;
    sc_exp->add_option("--spec", exp_spec, "experiment spec JSON path")->required();

    // ---- nadir-bench ----
    auto* sc_nb = app.add_subcommand("nadir-bench", "Nadir estimation benchmark table");
    std::string nb_out, nb_problems = "dtlz1,dtlz2,wfg2", nb_ms = "8,10,15,20";
    int nb_runs = 5;
    std::uint64_t nb_seed = 1, nb_cap = 100000;
    sc_nb->add_option("--out", nb_out, "output directory")->required();
    sc_nb->add_option("--problems", nb_problems, "comma-separated benchmark ids");
    sc_nb->add_option("--ms", nb_ms, "comma-separated objective counts");
    sc_nb->add_option("--runs", nb_runs, "independent runs per cell");
    sc_nb->add_option("--seed", nb_seed, "base seed");
    sc_nb->add_option("--cap", nb_cap, "total evaluation cap per run");

    // ---- compare ----
    auto* sc_cmp = app.add_subcommand("compare", "Rank-sum comparison of two cell CSVs");
    std::string cmp_a, cmp_b, cmp_metric = "hv_normalized";
    std::string cmp_algo_a = "maoea-igd", cmp_algo_b = "random-baseline";
    sc_cmp->add_option("--a", cmp_a, "first cell CSV")->required();
    sc_cmp->add_option("--b", cmp_b, "second cell CSV")->required();
    sc_cmp->add_option("--metric", cmp_metric, "indicator column (default hv_normalized)");
    sc_cmp->add_option("--algo-a", cmp_algo_a, "algorithm filter for --a");
    sc_cmp->add_option("--algo-b", cmp_algo_b, "algorithm filter for --b");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (sc_ref->parsed()) {
        const auto divisions = parse_int_list(ref_divisions);
        if (divisions.empty() || divisions.size() > 2)
            throw ConfigError("--divisions expects 'outer' or 'outer,inner'");
        LayerConfig layers{divisions[0], divisions.size() == 2 ? divisions[1] : 0, 0.5};
        ReferencePointSet pts = two_layer(ref_m, layers);
        if (!ref_ideal.empty() || !ref_nadir.empty()) {
            if (ref_ideal.empty() || ref_nadir.empty())
                throw ConfigError("--ideal and --nadir must be given together");
            pts = to_utopian(pts, parse_double_list(ref_ideal), parse_double_list(ref_nadir));
        }
        write_point_matrix(ref_out, pts.points, 17);
        std::cout << pts.size() << " reference points -> " << ref_out << "\n";
        return 0;
    }

    if (sc_nadir->parsed()) {
        const auto problem = make_problem(nadir_problem, nadir_m);
        DnpeConfig cfg = DnpeConfig::benchmark_defaults(nadir_m);
        cfg.lambda = nadir_lambda;
        cfg.per_extreme_eval_budget =
            std::max<std::uint64_t>(nadir_budget / static_cast<std::uint64_t>(nadir_m), 1);
        RandomSource rng(nadir_seed);
        const NadirReport report = run_dnpe(*problem, cfg, rng);
        const json j = report;
        write_text_file(nadir_out, j.dump(1) + "\n");
        std::cout << "nadir report (" << report.evaluations << " evaluations) -> " << nadir_out
                  << "\n";
        return 0;
    }

    if (sc_metric->parsed()) {
        const Matrix front = read_point_matrix(metric_front);
        const Matrix reference = read_point_matrix(metric_reference);
        double value = 0.0;
        if (metric_kind == "igd" || metric_kind == "igdplus") {
            value = igd(reference, front, metric_kind == "igdplus");
        } else if (metric_kind == "hv") {
            if (reference.rows != 1)
                throw ConfigError("hv expects a single reference point row");
            const auto ref = reference.row(0);
            if (metric_samples > 0) {
                const std::vector<double> lower(ref.size(), 0.0);
                RandomSource rng(metric_seed);
                value = hv_monte_carlo(front, ref, lower, metric_samples, rng);
            } else {
                value = hv_exact(front, ref);
            }
        } else {
            throw ConfigError("unknown metric kind '" + metric_kind + "'");
        }
        std::cout << fmt_g(value, 12) << "\n";
        return 0;
    }

    if (sc_run->parsed()) {
        EngineConfig config;
        config.problem_id = run_problem;
        config.m = run_m;
        config.total_eval_budget = run_budget;
        config.seed = run_seed;
        if (!run_divisions.empty()) {
            const auto divisions = parse_int_list(run_divisions);
            if (divisions.empty() || divisions.size() > 2)
                throw ConfigError("--divisions expects 'outer' or 'outer,inner'");
            config.layers = {divisions[0], divisions.size() == 2 ? divisions[1] : 0, 0.5};
        }
        RunRecord record;
        if (run_algorithm == "maoea-igd") {
            record = run(config);
        } else if (run_algorithm == "baseline") {
            record = run_random_baseline(config);
        } else {
            throw ConfigError("unknown algorithm '" + run_algorithm + "'");
        }
        std::error_code ec;
        fs::create_directories(run_out, ec);
        if (ec) throw IoError("cannot create " + run_out);
        const json j = record;
        write_text_file(fs::path(run_out) / "record.json", j.dump(1) + "\n");
        write_point_matrix(fs::path(run_out) / "final_objectives.csv",
                           objectives_of(record.final_population));
        std::cout << record.algorithm << ": " << record.total_evaluations << " evaluations, "
                  << record.final_population.size() << " final solutions -> " << run_out << "\n";
        return 0;
    }

    if (sc_exp->parsed()) {
        const json j = json::parse(read_text_file(exp_spec));
        const ExperimentSpec spec = ExperimentSpec::from_json(j);
        const SummaryTable summary = run_experiment(spec);
        std::cout << "experiment complete: " << summary.rows.size() << " summary rows -> "
                  << (spec.out_dir / "summary.csv").string() << "\n";
        return 0;
    }

    if (sc_nb->parsed()) {
        std::error_code ec;
        fs::create_directories(nb_out, ec);
        if (ec) throw IoError("cannot create " + nb_out);
        const CsvTable table = nadir_experiment(parse_string_list(nb_problems),
                                                parse_int_list(nb_ms), nb_runs, nb_seed, nb_cap);
        write_csv(fs::path(nb_out) / "nadir_bench.csv", table);
        std::cout << "nadir benchmark: " << table.rows.size() << " rows -> "
                  << (fs::path(nb_out) / "nadir_bench.csv").string() << "\n";
        return 0;
    }

    if (sc_cmp->parsed()) {
        const bool smaller_better = cmp_metric == "igd" || cmp_metric == "igd_plus";
        const CellComparison cmp =
            compare_cells(read_csv(cmp_a), read_csv(cmp_b), cmp_metric, cmp_algo_a, cmp_algo_b,
                          smaller_better);
        std::cout << "U=" << fmt_g(cmp.u_statistic, 12) << " p=" << fmt_g(cmp.p_value, 12)
                  << " median_a=" << fmt_g(cmp.median_a, 12)
                  << " median_b=" << fmt_g(cmp.median_b, 12) << " mark=" << cmp.mark << "\n";
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const IoError& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 1;
    }
}
