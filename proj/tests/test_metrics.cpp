#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "maoea/metrics.hpp"

using namespace maoea;

namespace {

Matrix matrix_of(std::vector<std::vector<double>> rows) {
    Matrix m;
    for (const auto& r : rows) m.push_row(r);
    return m;
}

// quadrature-free oracle: hypervolume of a 2D front by the staircase sum
double hv2d_oracle(std::vector<std::vector<double>> pts, const std::vector<double>& ref) {
    std::vector<std::vector<double>> kept;
    for (const auto& p : pts)
        if (p[0] < ref[0] && p[1] < ref[1]) kept.push_back(p);
    std::sort(kept.begin(), kept.end());
    double volume = 0.0;
    double best_y = ref[1];
    for (const auto& p : kept) {
        if (p[1] < best_y) {
            volume += (ref[0] - p[0]) * (best_y - p[1]);
            best_y = p[1];
        }
    }
    return volume;
}

}  // namespace

TEST_CASE("igd: spec examples") {
    const auto reference = matrix_of({{0.0, 1.0}, {1.0, 0.0}});

    CHECK(igd(reference, matrix_of({{0.0, 1.0}, {1.0, 0.0}}), false) == 0.0);
    CHECK(igd(reference, matrix_of({{0.0, 1.0}, {1.0, 0.0}}), true) == 0.0);
    CHECK(igd(reference, matrix_of({{1.0, 1.0}}), false) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(igd(reference, matrix_of({{0.5, 0.5}}), true) == doctest::Approx(0.5).epsilon(1e-12));

    Matrix empty;
    CHECK_THROWS_AS(igd(reference, empty, false), ContractError);
}

TEST_CASE("igd zero iff exact match; igd_plus zero iff weak domination") {
    const auto reference = matrix_of({{0.2, 0.8}, {0.8, 0.2}});
    // a front that weakly dominates every reference point
    const auto dominating = matrix_of({{0.2, 0.7}, {0.7, 0.2}});
    CHECK(igd(reference, dominating, true) == 0.0);
    CHECK(igd(reference, dominating, false) > 0.0);
}

TEST_CASE("igd_plus never exceeds igd (random pairs)") {
    RandomSource rng(15);
    for (int trial = 0; trial < 10000; ++trial) {
        const int m = 2 + static_cast<int>(rng.next_below(4));
        Matrix reference(1 + rng.next_below(6), m);
        Matrix front(1 + rng.next_below(6), m);
        for (auto& v : reference.data) v = rng.next_double();
        for (auto& v : front.data) v = rng.next_double();
        REQUIRE(igd(reference, front, true) <= igd(reference, front, false) + 1e-15);
    }
}

TEST_CASE("hv_exact: box examples") {
    CHECK(hv_exact(matrix_of({{1.0, 1.0}}), std::vector<double>{2.0, 2.0}) == 1.0);
    // nested box adds nothing
    CHECK(hv_exact(matrix_of({{1.0, 1.0}, {1.5, 1.5}}), std::vector<double>{2.0, 2.0}) == 1.0);
    // point dominated by the reference point is discarded
    CHECK(hv_exact(matrix_of({{3.0, 3.0}}), std::vector<double>{2.0, 2.0}) == 0.0);
    // empty front
    CHECK(hv_exact(Matrix{}, std::vector<double>{2.0, 2.0}) == 0.0);
    CHECK_THROWS_AS(hv_exact(Matrix(1, 9, 0.5), std::vector<double>(9, 1.0)),
                    UnsupportedError);
}

TEST_CASE("hv_exact: 2D staircase oracle on random fronts") {
    RandomSource rng(16);
    const std::vector<double> ref{1.0, 1.0};
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<std::vector<double>> pts(1 + rng.next_below(20));
        for (auto& p : pts) p = {rng.uniform(0.0, 1.2), rng.uniform(0.0, 1.2)};
        Matrix front;
        for (const auto& p : pts) front.push_row(p);
        CHECK(hv_exact(front, ref) == doctest::Approx(hv2d_oracle(pts, ref)).epsilon(1e-12));
    }
}

TEST_CASE("hv_exact: adding a dominated point never changes the volume") {
    RandomSource rng(17);
    const std::vector<double> ref{1.0, 1.0, 1.0};
    for (int trial = 0; trial < 200; ++trial) {
        Matrix front(4, 3);
        for (auto& v : front.data) v = rng.next_double();
        const double base = hv_exact(front, ref);
        // duplicate a point shifted outward: strictly dominated
        std::vector<double> extra(front.row(0).begin(), front.row(0).end());
        for (auto& v : extra) v = std::min(v + 0.1 * rng.next_double(), 0.999);
        front.push_row(extra);
        CHECK(hv_exact(front, ref) == doctest::Approx(base).epsilon(1e-12));
    }
}

TEST_CASE("hv_exact: 3D slicing agrees with inclusion-exclusion on two boxes") {
    // volumes: |A| + |B| - |A ∩ B| with A=[a,r], B=[b,r]
    const std::vector<double> r{1.0, 1.0, 1.0};
    const std::vector<double> a{0.2, 0.5, 0.3}, b{0.6, 0.1, 0.4};
    const double va = (1 - a[0]) * (1 - a[1]) * (1 - a[2]);
    const double vb = (1 - b[0]) * (1 - b[1]) * (1 - b[2]);
    const double vab = (1 - std::max(a[0], b[0])) * (1 - std::max(a[1], b[1])) *
                       (1 - std::max(a[2], b[2]));
    CHECK(hv_exact(matrix_of({a, b}), r) == doctest::Approx(va + vb - vab).epsilon(1e-12));
}

TEST_CASE("hv_monte_carlo: trivial cases") {
    RandomSource rng(18);
    const std::vector<double> ref(3, 1.0), lower(3, 0.0);

    CHECK(hv_monte_carlo(Matrix{}, ref, lower, 1000, rng) == 0.0);

    // origin point dominates everything: full box volume exactly
    const auto full = hv_monte_carlo(matrix_of({{0.0, 0.0, 0.0}}), ref, lower, 10000, rng);
    CHECK(full == doctest::Approx(1.0));

    CHECK_THROWS_AS(
        hv_monte_carlo(Matrix{}, ref, std::vector<double>{0.0, 2.0, 0.0}, 10, rng),
        DomainError);
}

TEST_CASE("hv_monte_carlo: within 2% of hv_exact on random m=3 fronts") {
    RandomSource rng(19);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix front(20, 3);
        for (auto& v : front.data) v = rng.next_double();
        const std::vector<double> ref(3, 1.5), lower(3, 0.0);
        const double exact = hv_exact(front, ref);
        RandomSource mc(trial);
        const double approx = hv_monte_carlo(front, ref, lower, 200000, mc);
        CHECK(std::abs(approx - exact) <= 0.02 * exact);
    }
}

TEST_CASE("hv_monte_carlo: doubling samples shrinks the error (30 seeds)") {
    RandomSource rng(20);
    Matrix front(10, 3);
    for (auto& v : front.data) v = rng.next_double();
    const std::vector<double> ref(3, 1.5), lower(3, 0.0);
    const double exact = hv_exact(front, ref);

    auto rmse = [&](std::uint64_t samples) {
        double acc = 0.0;
        for (int seed = 0; seed < 30; ++seed) {
            RandomSource mc(seed);
            const double err = hv_monte_carlo(front, ref, lower, samples, mc) - exact;
            acc += err * err;
        }
        return std::sqrt(acc / 30.0);
    };
    // fourfold samples should halve the RMSE, allow generous statistical slack
    CHECK(rmse(160000) < 0.75 * rmse(10000));
}

TEST_CASE("hv_normalized: protocol reference points") {
    CHECK(hv_reference_point("dtlz1", 3) == std::vector<double>{1, 1, 1});
    CHECK(hv_reference_point("dtlz4", 3) == std::vector<double>{2, 2, 2});
    CHECK(hv_reference_point("dtlz7", 3) == std::vector<double>{3, 5, 7});
    CHECK(hv_reference_point("wfg5", 4) == std::vector<double>{3, 5, 7, 9});
    CHECK_THROWS_AS(hv_reference_point("nope", 3), ConfigError);

    // one point at the ideal origin owns the whole box
    const auto result = hv_normalized(matrix_of({{0.0, 0.0}}), "dtlz2", 2);
    CHECK(result.value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_FALSE(result.sample_count.has_value());

    RandomSource rng(21);
    Matrix front(30, 2);
    for (auto& v : front.data) v = rng.uniform(0.0, 2.5);
    const auto r = hv_normalized(front, "wfg1", 2);
    CHECK(r.value >= 0.0);
    CHECK(r.value <= 1.0);
}

TEST_CASE("hv_normalized: Monte Carlo path beyond m=8") {
    Matrix front(1, 10, 0.0);  // origin point
    const auto result = hv_normalized(front, "dtlz2", 10, 50000, 7);
    CHECK(result.value == doctest::Approx(1.0));
    CHECK(result.sample_count.has_value());
}

// ---------------------------------------------------------------------------
// rank-sum test
// ---------------------------------------------------------------------------
namespace {

// independent oracle: enumerate subsets of pooled indices directly and count
// assignments at least as extreme (pairwise-comparison U, midrank ties)
struct ExactOracle {
    double u = 0.0;
    double p = 1.0;
};

double pairwise_u(const std::vector<double>& a, const std::vector<double>& b) {
    double u = 0.0;
    for (double x : a) {
        for (double y : b) {
            if (x > y) u += 1.0;
            else if (x == y) u += 0.5;
        }
    }
    return u;
}

ExactOracle oracle_rank_sum(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> pooled(a);
    pooled.insert(pooled.end(), b.begin(), b.end());
    const std::size_t n = pooled.size(), na = a.size();
    const double mu = static_cast<double>(na) * (n - na) / 2.0;

    ExactOracle result;
    result.u = pairwise_u(a, b);
    const double dev = std::abs(result.u - mu);

    std::uint64_t total = 0, extreme = 0;
    std::vector<bool> mask(n, false);
    std::fill(mask.begin(), mask.begin() + na, true);
    std::sort(mask.begin(), mask.end());
    do {
        std::vector<double> xa, xb;
        for (std::size_t i = 0; i < n; ++i) (mask[i] ? xa : xb).push_back(pooled[i]);
        ++total;
        if (std::abs(pairwise_u(xa, xb) - mu) >= dev - 1e-12) ++extreme;
    } while (std::next_permutation(mask.begin(), mask.end()));
    result.p = static_cast<double>(extreme) / static_cast<double>(total);
    return result;
}

}  // namespace

TEST_CASE("rank_sum_test: spec examples") {
    const auto r = rank_sum_test(std::vector<double>{1, 2}, std::vector<double>{3, 4});
    CHECK(r.u_statistic == 0.0);
    CHECK(r.p_value == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(r.exact);

    const auto same =
        rank_sum_test(std::vector<double>{5, 5, 5}, std::vector<double>{5, 5, 5});
    CHECK(same.p_value == doctest::Approx(1.0).epsilon(1e-12));

    std::vector<double> lo(30), hi(30);
    std::iota(lo.begin(), lo.end(), 1.0);
    std::iota(hi.begin(), hi.end(), 31.0);
    const auto split = rank_sum_test(lo, hi);
    CHECK_FALSE(split.exact);
    CHECK(split.p_value < 0.001);

    CHECK_THROWS_AS(rank_sum_test(std::vector<double>{1}, std::vector<double>{1, 2}),
                    ConfigError);
}

TEST_CASE("rank_sum_test: exact path matches exhaustive enumeration up to (8,8)") {
    RandomSource rng(22);
    for (std::size_t na = 2; na <= 8; ++na) {
        for (std::size_t nb = na; nb <= 8; ++nb) {
            for (int rep = 0; rep < 3; ++rep) {
                std::vector<double> a(na), b(nb);
                // small integer grid provokes ties
                for (auto& v : a) v = static_cast<double>(rng.next_below(6));
                for (auto& v : b) v = static_cast<double>(rng.next_below(6));
                const auto got = rank_sum_test(a, b);
                const auto want = oracle_rank_sum(a, b);
                REQUIRE(got.exact);
                REQUIRE(std::abs(got.u_statistic - want.u) <= 1e-12);
                REQUIRE(std::abs(got.p_value - want.p) <= 1e-12);
            }
        }
    }
}

TEST_CASE("rank_sum_test: normal approximation is sane on shifted samples") {
    RandomSource rng(23);
    std::vector<double> a(25), b(25);
    for (auto& v : a) v = rng.next_double();
    for (auto& v : b) v = rng.next_double() + 2.0;  // clear separation
    const auto r = rank_sum_test(a, b);
    CHECK_FALSE(r.exact);
    CHECK(r.p_value < 1e-6);

    // identical distributions should usually not reject
    for (auto& v : b) v -= 2.0;
    int rejections = 0;
    for (int rep = 0; rep < 50; ++rep) {
        for (auto& v : a) v = rng.next_double();
        for (auto& v : b) v = rng.next_double();
        if (rank_sum_test(a, b).p_value < 0.05) ++rejections;
    }
    CHECK(rejections <= 8);
}
