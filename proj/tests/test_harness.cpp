#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>

#include "maoea/harness.hpp"

using namespace maoea;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("maoea_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(reinterpret_cast<std::uintptr_t>(this)));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

json tiny_spec(const fs::path& out) {
    return json{{"problems", json::array({json{{"id", "dtlz2"}, {"m", 3}}})},
                {"runs", 3},
                {"budget", 4000},
                {"seed", 5},
                {"out", out.string()},
                {"engine", json{{"layers", json{{"outer_divisions", 5}}},
                                {"track_igd", false}}}};
}

}  // namespace

TEST_CASE("csv round-trip is byte-identical") {
    CsvTable table;
    table.header = {"a", "b", "c"};
    table.rows = {{"1", "x,y", "plain"}, {"2", "quote\"inside", "0.6180339887498949"}};
    const std::string text = csv_to_string(table);
    const CsvTable parsed = csv_from_string(text);
    CHECK(parsed.header == table.header);
    CHECK(parsed.rows == table.rows);
    CHECK(csv_to_string(parsed) == text);
}

TEST_CASE("statistics helpers") {
    CHECK(median_of({3.0, 1.0, 2.0}) == 2.0);
    CHECK(median_of({4.0, 1.0, 2.0, 3.0}) == 2.5);
    CHECK(mean_of({1.0, 2.0, 3.0}) == 2.0);
    CHECK(stddev_of({2.0, 4.0, 4.0, 4.0, 5.0, 5.0, 7.0, 9.0}) ==
          doctest::Approx(2.13809).epsilon(1e-5));
    CHECK_THROWS_AS(median_of({}), ContractError);
}

TEST_CASE("ExperimentSpec::from_json parses and validates") {
    TempDir tmp;
    const auto spec = ExperimentSpec::from_json(tiny_spec(tmp.path / "exp"));
    CHECK(spec.problems.size() == 1);
    CHECK(spec.runs_per_cell == 3);
    CHECK(spec.budget_for(3) == 4000);
    CHECK(spec.base_seed == 5);

    json bad = tiny_spec(tmp.path / "exp");
    bad.erase("problems");
    CHECK_THROWS_AS(ExperimentSpec::from_json(bad), ConfigError);

    json by_m = tiny_spec(tmp.path / "exp");
    by_m["budget"] = json{{"3", 1234}, {"8", 5678}};
    const auto spec2 = ExperimentSpec::from_json(by_m);
    CHECK(spec2.budget_for(3) == 1234);
    CHECK(spec2.budget_for(8) == 5678);
    CHECK_THROWS_AS(spec2.budget_for(5), ConfigError);
}

TEST_CASE("run_experiment: file contract and summary consistency") {
    TempDir tmp;
    const auto spec = ExperimentSpec::from_json(tiny_spec(tmp.path / "exp"));
    const SummaryTable summary = run_experiment(spec);

    const fs::path cell = tmp.path / "exp" / "dtlz2_m3";
    for (int r = 0; r < 3; ++r) {
        CHECK(fs::exists(cell / ("engine_run" + std::to_string(r) + ".json")));
        CHECK(fs::exists(cell / ("baseline_run" + std::to_string(r) + ".json")));
    }
    CHECK(fs::exists(cell / "cell.csv"));
    CHECK(fs::exists(tmp.path / "exp" / "summary.csv"));

    const CsvTable cell_csv = read_csv(cell / "cell.csv");
    CHECK(cell_csv.rows.size() == 6);  // 3 runs x 2 algorithms

    // summary statistics recomputed from the cell CSV match the emitted summary
    std::map<std::string, std::vector<double>> hv;
    std::size_t algo_col = 2, hv_col = 4;
    for (const auto& row : cell_csv.rows) hv[row[algo_col]].push_back(parse_double(row[hv_col]));
    for (const auto& row : summary.rows) {
        if (row[3] != "hv_normalized") continue;
        const auto& values = hv.at(row[2]);
        CHECK(parse_double(row[4]) == doctest::Approx(mean_of(values)).epsilon(1e-15));
        CHECK(parse_double(row[5]) == doctest::Approx(stddev_of(values)).epsilon(1e-15));
        CHECK(parse_double(row[6]) == doctest::Approx(median_of(values)).epsilon(1e-15));
    }

    // marks agree with the recomputed rank-sum decision
    for (const auto& row : summary.rows) {
        if (row[2] != "maoea-igd" || row[3] != "hv_normalized") continue;
        REQUIRE_FALSE(row[7].empty());
        const auto rs = rank_sum_test(hv.at("maoea-igd"), hv.at("random-baseline"));
        CHECK(parse_double(row[7]) == doctest::Approx(rs.p_value).epsilon(1e-15));
        const char expected =
            rs.p_value >= 0.05
                ? '='
                : (median_of(hv.at("maoea-igd")) > median_of(hv.at("random-baseline")) ? '+'
                                                                                       : '-');
        CHECK(row[8] == std::string(1, expected));
    }

    // deterministic rerun produces byte-identical artifacts
    const std::string summary_bytes = read_text_file(tmp.path / "exp" / "summary.csv");
    const std::string record_bytes = read_text_file(cell / "engine_run0.json");
    run_experiment(spec);
    CHECK(read_text_file(tmp.path / "exp" / "summary.csv") == summary_bytes);
    CHECK(read_text_file(cell / "engine_run0.json") == record_bytes);
}

TEST_CASE("run_experiment: unwritable output directory fails before any run") {
    ExperimentSpec spec;
    spec.problems = {{"dtlz2", 3}};
    spec.runs_per_cell = 1;
    spec.default_budget = 1000;
    spec.out_dir = "/proc/definitely_not_writable/exp";
    CHECK_THROWS_AS(run_experiment(spec), IoError);
}

TEST_CASE("nadir_experiment: forced tiny cap records exhausted runs") {
    const CsvTable table = nadir_experiment({"dtlz2"}, {3}, 2, 9, 10);
    REQUIRE(table.rows.size() == 2);
    for (const auto& row : table.rows) {
        CHECK(row[0] == "dtlz2");
        const double error = parse_double(row[5]);
        CHECK(error > 0.01);
        CHECK(row[6] == "1");  // exhausted
        CHECK(std::stoull(row[4]) <= 10);
    }
}

TEST_CASE("nadir_experiment: rejects problems without a published nadir") {
    CHECK_THROWS_AS(nadir_experiment({"dtlz5"}, {3}, 1, 1), UnsupportedError);
}

TEST_CASE("compare_cells: reads indicator columns and marks") {
    CsvTable a, b;
    a.header = b.header = {"run", "seed", "algorithm", "igd", "hv_normalized"};
    for (int i = 0; i < 6; ++i) {
        a.rows.push_back({std::to_string(i), "0", "maoea-igd", "", fmt_g(0.9 + 0.001 * i, 17)});
        b.rows.push_back(
            {std::to_string(i), "0", "random-baseline", "", fmt_g(0.1 + 0.001 * i, 17)});
    }
    const auto cmp = compare_cells(a, b, "hv_normalized", "maoea-igd", "random-baseline", false);
    CHECK(cmp.mark == '+');
    CHECK(cmp.p_value < 0.05);
    CHECK(cmp.median_a > cmp.median_b);

    CHECK_THROWS_AS(compare_cells(a, b, "nope", "maoea-igd", "random-baseline", false),
                    ConfigError);
}
