#include "maoea/engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "maoea/metrics.hpp"
#include "maoea/problems.hpp"
#include "maoea/ranking.hpp"
#include "maoea/selection.hpp"

namespace maoea {

LayerConfig default_layers_for(int m) {
    LayerConfig cfg;
    switch (m) {
        case 2: cfg = {99, 0, 0.5}; break;
        case 3: cfg = {12, 0, 0.5}; break;
        case 4: cfg = {7, 0, 0.5}; break;
        case 5: cfg = {6, 0, 0.5}; break;
        case 6: cfg = {4, 3, 0.5}; break;
        case 7: cfg = {3, 3, 0.5}; break;
        case 8: cfg = {3, 3, 0.5}; break;
        case 9: cfg = {3, 2, 0.5}; break;
        case 10: cfg = {3, 2, 0.5}; break;
        default: cfg = (m <= 15) ? LayerConfig{2, 2, 0.5} : LayerConfig{2, 1, 0.5}; break;
    }
    return cfg;
}

EngineConfig EngineConfig::resolved() const {
    EngineConfig cfg = *this;
    if (cfg.m < 2) throw ConfigError("engine: m must be >= 2");
    if (cfg.total_eval_budget == 0) throw ConfigError("engine: total evaluation budget must be positive");
    parse_benchmark_id(cfg.problem_id, cfg.m);  // validates the id

    if (cfg.layers.outer_divisions == 0) cfg.layers = default_layers_for(cfg.m);
    const auto refs = two_layer(cfg.m, cfg.layers);
    const int k = static_cast<int>(refs.size());
    if (cfg.population == 0) cfg.population = k;
    if (cfg.population != k)
        throw ConfigError("engine: population (" + std::to_string(cfg.population) +
                          ") must equal the reference count (" + std::to_string(k) + ")");

    if (cfg.dnpe.per_extreme_eval_budget == 0)
        cfg.dnpe.per_extreme_eval_budget = static_cast<std::uint64_t>(100000 / cfg.m);
    if (!(cfg.dnpe_budget_fraction > 0.0 && cfg.dnpe_budget_fraction < 1.0))
        throw ConfigError("engine: dnpe_budget_fraction must lie in (0,1)");

    // The evaluation budget is shared between DNPE and the main loop; DNPE
    // receives at most dnpe_budget_fraction of the total.
    const std::uint64_t cap =
        static_cast<std::uint64_t>(cfg.dnpe_budget_fraction * cfg.total_eval_budget) / cfg.m;
    cfg.dnpe.per_extreme_eval_budget = std::min(cfg.dnpe.per_extreme_eval_budget,
                                                std::max<std::uint64_t>(cap, 1));
    cfg.dnpe.validate();
    cfg.variation.validate();
    return cfg;
}

namespace {

GenerationStats population_stats(std::span<const Individual> pop, std::uint64_t evaluations) {
    GenerationStats stats;
    stats.evaluations = evaluations;
    double best = std::numeric_limits<double>::infinity();
    double mean = 0.0;
    for (const auto& ind : pop) {
        const double d = ind.min_proximity();
        best = std::min(best, d);
        mean += d;
        switch (*ind.rank) {
            case RankClass::R1: ++stats.r1; break;
            case RankClass::R2: ++stats.r2; break;
            case RankClass::R3: ++stats.r3; break;
        }
    }
    stats.best_min_proximity = pop.empty() ? 0.0 : best;
    stats.mean_min_proximity = pop.empty() ? 0.0 : mean / static_cast<double>(pop.size());
    return stats;
}

std::vector<std::vector<double>> random_decisions(const Bounds& bounds, std::uint64_t count,
                                                  RandomSource& rng) {
    std::vector<std::vector<double>> out(count);
    for (auto& x : out) {
        x.resize(bounds.size());
        for (std::size_t j = 0; j < x.size(); ++j)
            x[j] = rng.uniform(bounds.lower[j], bounds.upper[j]);
    }
    return out;
}

}  // namespace

RunRecord run(const EngineConfig& raw_config) {
    const EngineConfig config = raw_config.resolved();
    const BenchmarkSpec spec = parse_benchmark_id(config.problem_id, config.m);
    const auto problem = make_problem(spec);
    const int n_pop = config.population;

    RandomSource root(config.seed);
    RandomSource dnpe_rng = root.split(0);
    RandomSource init_rng = root.split(1);
    RandomSource loop_rng = root.split(2);
    RandomSource front_rng = root.split(3);

    RunRecord record;
    record.algorithm = "maoea-igd";
    record.config = config;

    std::uint64_t evaluations = 0;

    // Phase 1: nadir estimation under its budget share.
    NadirReport nadir_report = run_dnpe(*problem, config.dnpe, dnpe_rng);
    evaluations += nadir_report.evaluations;

    // Phase 2: reference points on the Utopian front.
    ReferencePointSet refs =
        to_utopian(two_layer(config.m, config.layers), nadir_report.ideal, nadir_report.nadir);
    record.nadir = std::move(nadir_report);

    // Optional IGD tracking against an analytic front sample.
    Matrix igd_front;
    const bool track = config.track_igd && has_true_front(spec);
    if (track) igd_front = sample_true_front(spec, config.igd_front_samples, front_rng);

    // Phase 3: initial population.
    if (evaluations + n_pop > config.total_eval_budget)
        throw ConfigError("engine: budget exhausted before the initial population");
    auto population =
        evaluate_population(*problem, random_decisions(problem->bounds(), n_pop, init_rng),
                            evaluations);
    assign_all(population, refs);

    GenerationStats init_stats = population_stats(population, evaluations);
    if (track) init_stats.igd_value = igd(igd_front, objectives_of(population), false);
    record.generations.push_back(init_stats);

    // Phase 4: generational loop under the remaining budget.
    const int pool = config.variation.resolved_pool_size(n_pop);
    const std::uint64_t batch =
        static_cast<std::uint64_t>(pool / 2) * config.variation.children_per_pair;
    if (evaluations + batch > config.total_eval_budget)
        throw ConfigError("engine: budget exhausted before the first generation");

    while (evaluations + batch <= config.total_eval_budget) {
        auto offspring_x = generate_offspring(population, problem->bounds(), config.variation,
                                              loop_rng);
        auto offspring = evaluate_population(*problem, offspring_x, evaluations);
        assign_all(offspring, refs);

        std::vector<Individual> unioned;
        unioned.reserve(population.size() + offspring.size());
        unioned.insert(unioned.end(), population.begin(), population.end());
        unioned.insert(unioned.end(), std::make_move_iterator(offspring.begin()),
                       std::make_move_iterator(offspring.end()));
        population = environmental_select(unioned, refs, n_pop, loop_rng);

        GenerationStats stats = population_stats(population, evaluations);
        if (track) stats.igd_value = igd(igd_front, objectives_of(population), false);
        record.generations.push_back(stats);
    }

    record.final_population = std::move(population);
    record.total_evaluations = evaluations;
    return record;
}

// ---------------------------------------------------------------------------
// Random-search baseline
// ---------------------------------------------------------------------------
namespace {

// Streaming non-dominated archive insert; duplicates and dominated points are
// rejected, newly dominated members are evicted (order then restored).
bool archive_insert(std::vector<Individual>& archive, Individual candidate) {
    for (std::size_t a = 0; a < archive.size();) {
        if (archive[a].f == candidate.f || dominates(archive[a].f, candidate.f)) return false;
        if (dominates(candidate.f, archive[a].f)) {
            archive.erase(archive.begin() + a);
        } else {
            ++a;
        }
    }
    archive.push_back(std::move(candidate));
    return true;
}

double sq_distance(std::span<const double> a, std::span<const double> b) {
    double acc = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        const double d = a[j] - b[j];
        acc += d * d;
    }
    return acc;
}

// Iteratively drop the most crowded member (smallest distance to its nearest
// surviving neighbor, index tie-break) until `keep` remain. Nearest-neighbor
// distances are maintained incrementally.
void crowding_trim(std::vector<Individual>& chosen, std::size_t keep) {
    const std::size_t r = chosen.size();
    if (r <= keep) return;

    std::vector<char> alive(r, 1);
    std::vector<double> nearest(r);
    std::vector<std::size_t> nearest_of(r);
    auto recompute = [&](std::size_t i) {
        nearest[i] = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < r; ++j) {
            if (j == i || !alive[j]) continue;
            const double d = sq_distance(chosen[i].f, chosen[j].f);
            if (d < nearest[i]) {
                nearest[i] = d;
                nearest_of[i] = j;
            }
        }
    };
    for (std::size_t i = 0; i < r; ++i) recompute(i);

    std::size_t survivors = r;
    while (survivors > keep) {
        std::size_t victim = r;
        for (std::size_t i = 0; i < r; ++i) {
            if (alive[i] && (victim == r || nearest[i] < nearest[victim])) victim = i;
        }
        alive[victim] = 0;
        --survivors;
        for (std::size_t i = 0; i < r; ++i) {
            if (alive[i] && nearest_of[i] == victim) recompute(i);
        }
    }

    std::vector<Individual> kept;
    kept.reserve(keep);
    for (std::size_t i = 0; i < r; ++i) {
        if (alive[i]) kept.push_back(std::move(chosen[i]));
    }
    chosen = std::move(kept);
}

}  // namespace

RunRecord run_random_baseline(const EngineConfig& raw_config) {
    const EngineConfig config = raw_config.resolved();
    const BenchmarkSpec spec = parse_benchmark_id(config.problem_id, config.m);
    const auto problem = make_problem(spec);
    const std::size_t n_pop = static_cast<std::size_t>(config.population);

    RandomSource root(config.seed);
    RandomSource draw_rng = root.split(10);
    RandomSource front_rng = root.split(3);

    RunRecord record;
    record.algorithm = "random-baseline";
    record.config = config;

    Matrix igd_front;
    const bool track = config.track_igd && has_true_front(spec);
    if (track) igd_front = sample_true_front(spec, config.igd_front_samples, front_rng);

    std::uint64_t evaluations = 0;
    std::vector<Individual> archive;  // non-dominated points so far
    // bounded pool of recent dominated points, only used when the archive
    // cannot fill all N slots
    std::vector<Individual> spare;
    const std::size_t spare_cap = 4 * n_pop;

    const std::uint64_t chunk =
        std::max<std::uint64_t>(n_pop, config.total_eval_budget / 50);  // ~50 trajectory rows
    while (evaluations < config.total_eval_budget) {
        const std::uint64_t count = std::min(chunk, config.total_eval_budget - evaluations);
        auto batch = evaluate_population(
            *problem, random_decisions(problem->bounds(), count, draw_rng), evaluations);
        for (auto& ind : batch) {
            if (!archive_insert(archive, ind)) {
                if (spare.size() < spare_cap) spare.push_back(std::move(ind));
            }
        }

        GenerationStats stats;
        stats.evaluations = evaluations;
        if (track) stats.igd_value = igd(igd_front, objectives_of(archive), false);
        record.generations.push_back(stats);
    }

    std::vector<Individual> chosen = std::move(archive);
    if (chosen.size() > n_pop) {
        crowding_trim(chosen, n_pop);
    } else {
        // degenerate case: pad from the spare pool, best layers first
        while (chosen.size() < n_pop && !spare.empty()) {
            std::vector<Individual> layer;
            std::vector<Individual> rest;
            for (auto& ind : spare) {
                if (!archive_insert(layer, ind)) rest.push_back(std::move(ind));
            }
            if (chosen.size() + layer.size() > n_pop) crowding_trim(layer, n_pop - chosen.size());
            for (auto& ind : layer) chosen.push_back(std::move(ind));
            spare = std::move(rest);
        }
    }

    record.final_population = std::move(chosen);
    record.total_evaluations = evaluations;
    return record;
}

}  // namespace maoea
