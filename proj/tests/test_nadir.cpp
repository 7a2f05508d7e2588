#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "maoea/nadir.hpp"
#include "maoea/problems.hpp"

using namespace maoea;

TEST_CASE("scalarize: direct arithmetic") {
    CHECK(scalarize(std::vector<double>{1.0, 0.1}, 0, 100.0) ==
          doctest::Approx(2.0).epsilon(1e-15));
    CHECK(scalarize(std::vector<double>{0.0, 0.0, 0.0}, 1, 5.0) == 0.0);
    CHECK(scalarize(std::vector<double>{2.0, 3.0}, 1, 10.0) ==
          doctest::Approx(43.0).epsilon(1e-15));
    CHECK_THROWS_AS(scalarize(std::vector<double>{1.0}, 3, 100.0), DimensionError);
    CHECK_THROWS_AS(scalarize(std::vector<double>{1.0, 2.0}, 0, 1.0), ConfigError);
}

TEST_CASE("scalarize: monotone in |y_i| and off-axis magnitudes") {
    RandomSource rng(1);
    for (int trial = 0; trial < 2000; ++trial) {
        std::vector<double> y(4);
        for (auto& v : y) v = rng.uniform(-2.0, 2.0);
        const std::size_t axis = rng.next_below(4);
        const double base = scalarize(y, axis, 100.0);

        auto bumped = y;
        bumped[axis] += (bumped[axis] >= 0 ? 0.5 : -0.5);
        CHECK(scalarize(bumped, axis, 100.0) >= base);

        const std::size_t off = (axis + 1) % 4;
        bumped = y;
        bumped[off] += (bumped[off] >= 0 ? 0.5 : -0.5);
        CHECK(scalarize(bumped, axis, 100.0) >= base);
    }
}

TEST_CASE("nadir_error: worked examples") {
    CHECK(nadir_error(std::vector<double>{1.0, 1.0}, std::vector<double>{1.0, 1.0},
                      std::vector<double>{0.0, 0.0}) == 0.0);
    CHECK(nadir_error(std::vector<double>{1.1, 0.9}, std::vector<double>{1.0, 1.0},
                      std::vector<double>{0.0, 0.0}) ==
          doctest::Approx(std::sqrt(0.02)).epsilon(1e-12));
    CHECK(nadir_error(std::vector<double>{2.0, 3.96}, std::vector<double>{2.0, 4.0},
                      std::vector<double>{0.0, 0.0}) == doctest::Approx(0.01).epsilon(1e-12));
    CHECK_THROWS_AS(nadir_error(std::vector<double>{1.0}, std::vector<double>{1.0},
                                std::vector<double>{1.0}),
                    DomainError);
}

TEST_CASE("estimate_extreme_point: config validation") {
    const auto problem = make_problem("dtlz2", 3);
    DnpeConfig cfg;  // budget 0
    RandomSource rng(2);
    CHECK_THROWS_AS(estimate_extreme_point(*problem, 0, cfg, rng), ConfigError);
}

TEST_CASE("estimate_extreme_point: DTLZ2 axis 0 approaches the unit vector") {
    const auto problem = make_problem("dtlz2", 3);
    DnpeConfig cfg = DnpeConfig::benchmark_defaults(3);
    RandomSource rng(3);
    const auto result = estimate_extreme_point(*problem, 0, cfg, rng);
    CHECK(std::abs(result.best.f[0] - 1.0) <= 0.01);
    CHECK(result.evaluations <= cfg.per_extreme_eval_budget);
    CHECK(result.hit_tolerance);
}

TEST_CASE("estimate_extreme_point: determinism under a shared seed") {
    const auto problem = make_problem("dtlz2", 3);
    DnpeConfig cfg = DnpeConfig::benchmark_defaults(3);
    cfg.per_extreme_eval_budget = 3000;
    RandomSource r1(7), r2(7);
    const auto a = estimate_extreme_point(*problem, 1, cfg, r1);
    const auto b = estimate_extreme_point(*problem, 1, cfg, r2);
    CHECK(a.best.x == b.best.x);
    CHECK(a.best.f == b.best.f);
    CHECK(a.evaluations == b.evaluations);
}

TEST_CASE("estimate_extreme_point: best scalarized fitness is non-increasing (elitism)") {
    const auto problem = make_problem("dtlz1", 3);
    DnpeConfig cfg;
    cfg.population = 40;
    cfg.per_extreme_tolerance = 0.0;  // run the full budget
    RandomSource rng(11);

    double previous = std::numeric_limits<double>::infinity();
    // growing budgets re-run the same deterministic GA for longer; the best
    // fitness after b evaluations must never increase in b
    for (std::uint64_t budget : {40, 80, 160, 320, 640, 1280}) {
        cfg.per_extreme_eval_budget = budget;
        RandomSource local(11);
        const auto result = estimate_extreme_point(*problem, 0, cfg, local);
        const double fitness = scalarize(result.best.f, 0, cfg.lambda);
        CHECK(fitness <= previous + 1e-15);
        previous = fitness;
    }
}

TEST_CASE("run_dnpe: report invariants and budget accounting") {
    const auto problem = make_problem("dtlz2", 4);
    DnpeConfig cfg = DnpeConfig::benchmark_defaults(4);
    cfg.per_extreme_eval_budget = 4000;
    RandomSource rng(13);
    const auto report = run_dnpe(*problem, cfg, rng);

    REQUIRE(report.extremes.size() == 4);
    std::uint64_t total = 0;
    for (int i = 0; i < 4; ++i) {
        CHECK(report.nadir[i] == report.extremes[i].f[i]);
        for (int j = 0; j < 4; ++j) CHECK(report.ideal[j] <= report.extremes[i].f[j]);
    }
    for (int j = 0; j < 4; ++j) CHECK(report.ideal[j] <= report.nadir[j]);
    CHECK(report.evaluations <= 4 * cfg.per_extreme_eval_budget);
    (void)total;
}

TEST_CASE("run_dnpe: DTLZ1 m=3 finds the published nadir") {
    const auto problem = make_problem("dtlz1", 3);
    DnpeConfig cfg = DnpeConfig::benchmark_defaults(3);
    RandomSource rng(17);
    const auto report = run_dnpe(*problem, cfg, rng);
    REQUIRE(report.error.has_value());
    CHECK(*report.error <= 0.01);
    for (double v : report.nadir) CHECK(std::abs(v - 0.5) <= 0.02);
}

TEST_CASE("run_dnpe: DTLZ2 ideal components are near zero") {
    const auto problem = make_problem("dtlz2", 3);
    DnpeConfig cfg = DnpeConfig::benchmark_defaults(3);
    RandomSource rng(19);
    const auto report = run_dnpe(*problem, cfg, rng);
    for (double v : report.ideal) CHECK(v <= 0.01);
    REQUIRE(report.error.has_value());
    CHECK(*report.error <= 0.01);
}

TEST_CASE("run_dnpe: bit-reproducible with a fixed seed") {
    const auto problem = make_problem("wfg2", 3);
    DnpeConfig cfg = DnpeConfig::benchmark_defaults(3);
    cfg.per_extreme_eval_budget = 2000;
    RandomSource r1(23), r2(23);
    const auto a = run_dnpe(*problem, cfg, r1);
    const auto b = run_dnpe(*problem, cfg, r2);
    CHECK(a.nadir == b.nadir);
    CHECK(a.ideal == b.ideal);
    CHECK(a.evaluations == b.evaluations);
    for (std::size_t i = 0; i < a.extremes.size(); ++i) {
        CHECK(a.extremes[i].x == b.extremes[i].x);
        CHECK(a.extremes[i].f == b.extremes[i].f);
    }
}

TEST_CASE("run_dnpe: error stop disabled when the truth is unknown") {
    const auto problem = make_problem("dtlz5", 3);  // no published nadir
    DnpeConfig cfg = DnpeConfig::benchmark_defaults(3);
    cfg.per_extreme_eval_budget = 1500;
    RandomSource rng(29);
    const auto report = run_dnpe(*problem, cfg, rng);
    CHECK_FALSE(report.error.has_value());
    CHECK(report.axes_converged == 0);
    // only the budget applies, and it is fully consumed
    CHECK(report.evaluations == 3 * 1500);
}
