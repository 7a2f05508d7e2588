#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "maoea/ranking.hpp"

using namespace maoea;

namespace {

ReferencePointSet utopian(std::vector<std::vector<double>> rows) {
    ReferencePointSet set;
    set.m = static_cast<int>(rows[0].size());
    set.source = RefSource::Utopian;
    for (const auto& r : rows) set.points.push_row(r);
    return set;
}

std::vector<Individual> as_population(const std::vector<std::vector<double>>& objectives) {
    std::vector<Individual> pop;
    for (const auto& f : objectives) {
        Individual ind;
        ind.f = f;
        pop.push_back(std::move(ind));
    }
    return pop;
}

}  // namespace

TEST_CASE("rank_individual: definition cases") {
    const auto one_ref = utopian({{0.5, 0.5}});
    CHECK(rank_individual(std::vector<double>{0.4, 0.4}, one_ref) == RankClass::R1);

    const auto two_refs = utopian({{1.0, 0.0}, {0.0, 1.0}});
    CHECK(rank_individual(std::vector<double>{0.5, 0.5}, two_refs) == RankClass::R2);
    // dominated by (0,1), incomparable to (1,0): still R3
    CHECK(rank_individual(std::vector<double>{0.5, 2.0}, two_refs) == RankClass::R3);
    // dominated by every reference point
    CHECK(rank_individual(std::vector<double>{2.0, 2.0}, two_refs) == RankClass::R3);
}

TEST_CASE("rank_individual: a point equal to a reference is R2-compatible") {
    const auto refs = utopian({{1.0, 0.0}, {0.0, 1.0}});
    CHECK(rank_individual(std::vector<double>{1.0, 0.0}, refs) == RankClass::R2);
}

TEST_CASE("rank_individual: preconditions") {
    auto refs = utopian({{1.0, 0.0}});
    CHECK_THROWS_AS(rank_individual(std::vector<double>{1.0, 0.0, 0.0}, refs), DimensionError);
    refs.source = RefSource::UnitSimplex;
    CHECK_THROWS_AS(rank_individual(std::vector<double>{1.0, 0.0}, refs), ContractError);
}

TEST_CASE("proximity_row: truncated distance fixtures") {
    const auto ref = utopian({{1.0, 0.0}});

    // y = (1.5, 0.5) is dominated by the reference, so its actual class is
    // R3 -- where Euclidean equals the fully-active truncated value 0.707107
    auto row = proximity_row(std::vector<double>{1.5, 0.5}, RankClass::R3, ref);
    CHECK(row[0] == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
    CHECK(std::abs(row[0] - 0.707107) < 1e-6);

    // the dominated component is truncated; Euclidean would give 1.5811
    row = proximity_row(std::vector<double>{0.5, 1.5}, RankClass::R2, ref);
    CHECK(row[0] == doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("proximity_row: R1 rows are negative Euclidean distances") {
    const auto ref = utopian({{0.5, 0.5}});
    const auto row = proximity_row(std::vector<double>{0.4, 0.4}, RankClass::R1, ref);
    CHECK(row[0] == doctest::Approx(-std::sqrt(0.02)).epsilon(1e-12));
    CHECK(std::abs(row[0] + 0.141421) < 1e-6);
}

TEST_CASE("proximity_row: inconsistent rank is a contract violation") {
    const auto ref = utopian({{0.5, 0.5}});
    CHECK_THROWS_AS(proximity_row(std::vector<double>{0.4, 0.4}, RankClass::R3, ref),
                    ContractError);
}

TEST_CASE("proximity distance triple from the truncated-vs-Euclidean example") {
    // Derived fixture realizing the reported distance triples: three R2
    // individuals whose Euclidean distances are 2.2361/2.5495/2.8284 but whose
    // truncated distances are 2/0.5/2.
    const auto refs = utopian({{4.0, 4.0}});
    const std::vector<double> y1{refs.points.at(0, 0) + 2.0, refs.points.at(0, 1) - 1.0};
    const std::vector<double> y2{refs.points.at(0, 0) + 0.5, refs.points.at(0, 1) - 2.5};
    const std::vector<double> y3{refs.points.at(0, 0) + 2.0, refs.points.at(0, 1) - 2.0};

    auto euclid = [&](const std::vector<double>& y) {
        const double dx = y[0] - refs.points.at(0, 0);
        const double dy = y[1] - refs.points.at(0, 1);
        return std::sqrt(dx * dx + dy * dy);
    };
    CHECK(euclid(y1) == doctest::Approx(2.2361).epsilon(1e-4));
    CHECK(euclid(y2) == doctest::Approx(2.5495).epsilon(1e-4));
    CHECK(euclid(y3) == doctest::Approx(2.8284).epsilon(1e-4));

    CHECK(proximity_row(y1, RankClass::R2, refs)[0] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(proximity_row(y2, RankClass::R2, refs)[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(proximity_row(y3, RankClass::R2, refs)[0] == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("assign_all: population equal to the reference set is all R2 with zero entries") {
    const auto refs = utopian({{1.0, 0.0}, {0.5, 0.5}, {0.0, 1.0}});
    auto pop = as_population({{1.0, 0.0}, {0.5, 0.5}, {0.0, 1.0}});
    const auto matrix = assign_all(pop, refs);
    for (std::size_t i = 0; i < pop.size(); ++i) {
        CHECK(matrix.row_rank[i] == RankClass::R2);
        CHECK(matrix.d.at(i, i) == 0.0);
        CHECK(*pop[i].rank == RankClass::R2);
        CHECK(pop[i].proximity.size() == refs.size());
    }
}

TEST_CASE("assign_all: empty population gives an empty matrix") {
    const auto refs = utopian({{1.0, 0.0}});
    std::vector<Individual> pop;
    const auto matrix = assign_all(pop, refs);
    CHECK(matrix.d.rows == 0);
    CHECK(matrix.row_rank.empty());
}

TEST_CASE("assign_all: fuzzed sign pattern, partition and comparison budget") {
    RandomSource rng(77);
    for (int trial = 0; trial < 300; ++trial) {
        const int m = 2 + static_cast<int>(rng.next_below(4));
        const std::size_t k = 1 + rng.next_below(12);
        const std::size_t q = 1 + rng.next_below(16);

        ReferencePointSet refs;
        refs.m = m;
        refs.source = RefSource::Utopian;
        for (std::size_t j = 0; j < k; ++j) {
            std::vector<double> p(m);
            for (auto& v : p) v = rng.next_double();
            refs.points.push_row(p);
        }
        std::vector<Individual> pop(q);
        for (auto& ind : pop) {
            ind.f.resize(m);
            for (auto& v : ind.f) v = rng.uniform(-0.2, 1.2);
        }

        const auto matrix = assign_all(pop, refs);
        CHECK(matrix.dominance_comparisons <= q * k);
        std::size_t counts[3] = {0, 0, 0};
        for (std::size_t i = 0; i < q; ++i) {
            ++counts[static_cast<int>(matrix.row_rank[i]) - 1];
            for (std::size_t j = 0; j < k; ++j) {
                const double d = matrix.d.at(i, j);
                switch (matrix.row_rank[i]) {
                    case RankClass::R1: CHECK(d <= 0.0); break;
                    case RankClass::R2: CHECK(d >= 0.0); break;
                    case RankClass::R3: CHECK(d >= 0.0); break;
                }
            }
        }
        CHECK(counts[0] + counts[1] + counts[2] == q);
    }
}

TEST_CASE("R2 rows: truncated distance never exceeds Euclidean") {
    RandomSource rng(99);
    const auto refs = utopian({{1.0, 0.2, 0.4}, {0.2, 1.0, 0.4}, {0.4, 0.2, 1.0}});
    for (int trial = 0; trial < 3000; ++trial) {
        std::vector<double> y(3);
        for (auto& v : y) v = rng.uniform(0.0, 1.4);
        if (rank_individual(y, refs) != RankClass::R2) continue;
        const auto row = proximity_row(y, RankClass::R2, refs);
        for (std::size_t j = 0; j < refs.size(); ++j) {
            double euclid = 0.0;
            for (int l = 0; l < 3; ++l) {
                const double diff = y[l] - refs.points.at(j, l);
                euclid += diff * diff;
            }
            CHECK(row[j] <= std::sqrt(euclid) + 1e-15);
        }
    }
}

TEST_CASE("most negative R1 entry identifies the farthest-beyond individual") {
    const auto refs = utopian({{1.0, 1.0}});
    auto pop = as_population({{0.9, 0.9}, {0.5, 0.5}, {0.7, 0.7}});
    assign_all(pop, refs);
    // all three dominate the single reference; (0.5, 0.5) is Euclidean-farthest
    for (const auto& ind : pop) CHECK(*ind.rank == RankClass::R1);
    std::size_t best = 0;
    for (std::size_t i = 1; i < pop.size(); ++i) {
        if (pop[i].min_proximity() < pop[best].min_proximity()) best = i;
    }
    CHECK(best == 1);
}
