#include "maoea/nadir.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>

#include "maoea/variation.hpp"

namespace maoea {

DnpeConfig DnpeConfig::benchmark_defaults(int m) {
    DnpeConfig cfg;
    cfg.per_extreme_eval_budget = static_cast<std::uint64_t>(100000 / m);
    cfg.per_extreme_tolerance = 0.01 / m;
    return cfg;
}

void DnpeConfig::validate() const {
    if (!(lambda > 1.0)) throw ConfigError("dnpe: lambda must be greater than 1");
    if (population < 2) throw ConfigError("dnpe: population must be at least 2");
    if (per_extreme_eval_budget == 0) throw ConfigError("dnpe: per-extreme budget must be positive");
    if (crossover_prob < 0.0 || crossover_prob > 1.0 || mutation_prob > 1.0)
        throw ConfigError("dnpe: operator probabilities out of range");
    if (crossover_eta <= 0.0 || mutation_eta <= 0.0)
        throw ConfigError("dnpe: distribution indices must be positive");
    if (offspring_per_generation < 0)
        throw ConfigError("dnpe: offspring_per_generation must be non-negative");
    if (pre_phase_fraction < 0.0 || pre_phase_fraction >= 1.0)
        throw ConfigError("dnpe: pre_phase_fraction must lie in [0,1)");
}

double scalarize(std::span<const double> y, std::size_t axis, double lambda) {
    if (axis >= y.size()) throw DimensionError("scalarize: axis out of range");
    if (!(lambda > 1.0)) throw ConfigError("scalarize: lambda must be greater than 1");
    double off_axis = 0.0;
    for (std::size_t j = 0; j < y.size(); ++j) {
        if (j != axis) off_axis += y[j] * y[j];
    }
    return std::abs(y[axis]) + lambda * off_axis;
}

namespace {

struct ScoredPoint {
    std::vector<double> x;
    std::vector<double> f;
    double fitness = 0.0;
};

// Per-axis relative error against a known ground truth.
double axis_error(const std::vector<double>& f, std::size_t axis,
                  const std::vector<double>& nad, const std::vector<double>& ideal) {
    return std::abs(f[axis] - nad[axis]) / (nad[axis] - ideal[axis]);
}

// Elitist single-objective GA used for both the pre-phase and the axis
// searches. `fitness` maps an objective vector to the score being minimized.
// Seeds are re-scored for free (their objective vectors are kept); missing
// population slots are filled with fresh uniform decisions.
template <typename Fitness>
std::vector<ScoredPoint> evolve(const Problem& problem, std::vector<ScoredPoint> seeds,
                                const DnpeConfig& cfg, std::uint64_t budget,
                                RandomSource& rng, Fitness&& fitness,
                                const std::function<bool(const ScoredPoint&)>& stop,
                                std::uint64_t& evals_used) {
    const Bounds& bounds = problem.bounds();
    const int n = problem.num_variables();

    VariationConfig var;
    var.crossover_prob = cfg.crossover_prob;
    var.mutation_prob = cfg.mutation_prob;
    var.sbx_eta = cfg.crossover_eta;
    var.mutation_eta = cfg.mutation_eta;

    std::uint64_t used = 0;
    auto evaluate = [&](std::vector<double> x) {
        ScoredPoint sp;
        sp.x = std::move(x);
        sp.f = problem.evaluate(sp.x);
        sp.fitness = fitness(sp.f);
        ++used;
        return sp;
    };

    std::vector<ScoredPoint> pop = std::move(seeds);
    for (auto& sp : pop) sp.fitness = fitness(sp.f);
    while (pop.size() < static_cast<std::size_t>(cfg.population) && used < budget) {
        std::vector<double> x(n);
        for (int j = 0; j < n; ++j) x[j] = rng.uniform(bounds.lower[j], bounds.upper[j]);
        pop.push_back(evaluate(std::move(x)));
    }
    std::stable_sort(pop.begin(), pop.end(), [](const ScoredPoint& a, const ScoredPoint& b) {
        return a.fitness < b.fitness;
    });

    auto tournament = [&]() -> const ScoredPoint& {
        const std::size_t i = rng.next_below(pop.size());
        const std::size_t j = rng.next_below(pop.size());
        return pop[i].fitness <= pop[j].fitness ? pop[i] : pop[j];
    };

    const std::uint64_t batch_size =
        cfg.offspring_per_generation > 0 ? cfg.offspring_per_generation : cfg.population;
    while (used < budget && !(!pop.empty() && stop(pop.front()))) {
        const std::uint64_t batch = std::min<std::uint64_t>(batch_size, budget - used);
        std::vector<ScoredPoint> children;
        children.reserve(batch);
        while (children.size() < batch) {
            auto [c1, c2] = sbx(tournament().x, tournament().x, bounds, var, rng);
            children.push_back(evaluate(polynomial_mutation(c1, bounds, var, rng)));
            if (children.size() < batch)
                children.push_back(evaluate(polynomial_mutation(c2, bounds, var, rng)));
        }
        pop.insert(pop.end(), std::make_move_iterator(children.begin()),
                   std::make_move_iterator(children.end()));
        std::stable_sort(pop.begin(), pop.end(), [](const ScoredPoint& a, const ScoredPoint& b) {
            return a.fitness < b.fitness;
        });
        if (pop.size() > static_cast<std::size_t>(cfg.population)) pop.resize(cfg.population);
    }
    evals_used += used;
    return pop;
}

struct AxisSearchOutput {
    ExtremePointResult result;
    std::vector<ScoredPoint> population;
};

// Penalty continuation: the scalarized optimum sits off the true extreme by a
// margin that shrinks with 1/lambda (or worse on product-shaped fronts), so a
// single weight cannot both explore and pin the extreme. Re-running the GA
// with geometrically growing weights follows the penalty central path; each
// stage starts from the previous population, and the final stage's fitness
// champion is the extreme-point estimate.
constexpr double kLambdaSchedule[] = {1.0, 1e3, 1e6, 1e9};
constexpr double kLambdaShare[] = {0.4, 0.25, 0.2, 0.15};

AxisSearchOutput axis_search(const Problem& problem, std::size_t axis, const DnpeConfig& cfg,
                             std::uint64_t budget, std::vector<ScoredPoint> seeds,
                             RandomSource& rng) {
    const auto known_nadir = problem.known_nadir();
    const auto known_ideal = problem.known_ideal();
    const bool error_stop = cfg.per_extreme_tolerance > 0.0 && known_nadir && known_ideal;

    AxisSearchOutput out;
    out.population = std::move(seeds);
    std::uint64_t used = 0;
    bool hit = false;
    for (int stage = 0; stage < 4 && used < budget; ++stage) {
        const double lambda = cfg.lambda * kLambdaSchedule[stage];
        const std::uint64_t stage_budget =
            (stage == 3) ? budget - used
                         : std::min<std::uint64_t>(
                               budget - used,
                               static_cast<std::uint64_t>(kLambdaShare[stage] * budget));

        std::function<bool(const ScoredPoint&)> stop = [](const ScoredPoint&) {
            return false;
        };
        if (error_stop) {
            stop = [&, axis](const ScoredPoint& best) {
                return axis_error(best.f, axis, *known_nadir, *known_ideal) <=
                       cfg.per_extreme_tolerance;
            };
        }
        out.population = evolve(
            problem, std::move(out.population), cfg, stage_budget, rng,
            [&, axis, lambda](const std::vector<double>& f) {
                return scalarize(f, axis, lambda);
            },
            stop, used);
        if (error_stop && stop(out.population.front())) {
            hit = true;
            break;
        }
    }

    out.result.best.x = out.population.front().x;
    out.result.best.f = out.population.front().f;
    out.result.evaluations = used;
    out.result.hit_tolerance = hit;
    return out;
}

}  // namespace

ExtremePointResult estimate_extreme_point(const Problem& problem, std::size_t axis,
                                          const DnpeConfig& cfg, RandomSource& rng) {
    cfg.validate();
    if (axis >= static_cast<std::size_t>(problem.num_objectives()))
        throw DimensionError("estimate_extreme_point: axis out of range");
    return axis_search(problem, axis, cfg, cfg.per_extreme_eval_budget, {}, rng).result;
}

namespace {

NadirReport run_dnpe_impl(const Problem& problem, const DnpeConfig& cfg, RandomSource& rng,
                          bool parallel) {
    cfg.validate();
    const int m = problem.num_objectives();
    const std::uint64_t total = cfg.per_extreme_eval_budget * static_cast<std::uint64_t>(m);

    const auto known_nadir = problem.known_nadir();
    const auto known_ideal = problem.known_ideal();

    NadirReport report;
    std::vector<ExtremePointResult> per_axis(m);

    if (!cfg.warm_start) {
        // independent axis searches, each capped at its fair share
        std::exception_ptr first_error;
        auto one_axis = [&](int i) {
            RandomSource child = rng.split(static_cast<std::uint64_t>(i));
            per_axis[i] =
                axis_search(problem, i, cfg, cfg.per_extreme_eval_budget, {}, child).result;
        };
        if (parallel) {
#pragma omp parallel for schedule(dynamic)
            for (int i = 0; i < m; ++i) {
                try {
                    one_axis(i);
                } catch (...) {
#pragma omp critical
                    if (!first_error) first_error = std::current_exception();
                }
            }
            if (first_error) std::rethrow_exception(first_error);
        } else {
            for (int i = 0; i < m; ++i) one_axis(i);
        }
        for (int i = 0; i < m; ++i) report.evaluations += per_axis[i].evaluations;
    } else {
        // Shared pool: a pre-phase settles the distance structure by driving
        // the objective norm down, then the axis searches chain through it,
        // each borrowing at most four fair shares of what remains.
        std::uint64_t evaluations = 0;

        std::vector<ScoredPoint> carried;
        const std::uint64_t pre_budget =
            static_cast<std::uint64_t>(cfg.pre_phase_fraction * total);
        if (pre_budget > 0) {
            RandomSource pre_rng = rng.split(static_cast<std::uint64_t>(m));
            carried = evolve(
                problem, {}, cfg, pre_budget, pre_rng,
                [](const std::vector<double>& f) {
                    double acc = 0.0;
                    for (double v : f) acc += v * v;
                    return acc;
                },
                [](const ScoredPoint&) { return false; }, evaluations);
        }

        const std::uint64_t floor_alloc = std::max<std::uint64_t>(
            cfg.population, (total - evaluations) / (4 * static_cast<std::uint64_t>(m)));
        for (int i = 0; i < m; ++i) {
            const std::uint64_t remaining = total - evaluations;
            const std::uint64_t reserved = floor_alloc * static_cast<std::uint64_t>(m - 1 - i);
            // borrow at most twice the fair share of what is left
            std::uint64_t allowance = std::min<std::uint64_t>(
                2 * remaining / static_cast<std::uint64_t>(m - i),
                remaining > reserved ? remaining - reserved : 0);
            if (allowance == 0) allowance = std::min<std::uint64_t>(remaining, floor_alloc);
            RandomSource child = rng.split(static_cast<std::uint64_t>(i));

            // seed with the better three quarters of the carried population;
            // fresh uniform decisions fill the rest so crossover keeps material
            std::vector<ScoredPoint> seeds(
                carried.begin(),
                carried.begin() + std::min(carried.size(),
                                           static_cast<std::size_t>(3 * cfg.population / 4)));

            auto out = axis_search(problem, i, cfg, allowance, std::move(seeds), child);
            per_axis[i] = out.result;
            carried = std::move(out.population);
            evaluations += out.result.evaluations;
#ifdef MAOEA_DNPE_TRACE
            std::fprintf(stderr, "axis %d allowance %lu used %lu tol %d f_hat %.5f\n", i,
                         (unsigned long)allowance, (unsigned long)out.result.evaluations,
                         (int)out.result.hit_tolerance, out.result.best.f[i]);
#endif
        }
        report.evaluations = evaluations;
    }

    report.nadir.resize(m);
    report.ideal.assign(m, std::numeric_limits<double>::infinity());
    for (int i = 0; i < m; ++i) {
        report.extremes.push_back(per_axis[i].best);
        if (per_axis[i].hit_tolerance) ++report.axes_converged;
        report.nadir[i] = per_axis[i].best.f[i];
        for (int j = 0; j < m; ++j)
            report.ideal[j] = std::min(report.ideal[j], per_axis[i].best.f[j]);
    }
    if (known_nadir && known_ideal)
        report.error = nadir_error(report.nadir, *known_nadir, *known_ideal);
    return report;
}

}  // namespace

NadirReport run_dnpe(const Problem& problem, const DnpeConfig& cfg, RandomSource& rng) {
    return run_dnpe_impl(problem, cfg, rng, true);
}

NadirReport run_dnpe_serial(const Problem& problem, const DnpeConfig& cfg, RandomSource& rng) {
    return run_dnpe_impl(problem, cfg, rng, false);
}

double nadir_error(std::span<const double> estimated, std::span<const double> true_nadir,
                   std::span<const double> true_ideal) {
    if (estimated.size() != true_nadir.size() || estimated.size() != true_ideal.size())
        throw DimensionError("nadir_error: length mismatch");
    double acc = 0.0;
    for (std::size_t i = 0; i < estimated.size(); ++i) {
        const double range = true_nadir[i] - true_ideal[i];
        if (range == 0.0)
            throw DomainError("nadir_error: degenerate range at objective " + std::to_string(i));
        const double rel = (true_nadir[i] - estimated[i]) / range;
        acc += rel * rel;
    }
    return std::sqrt(acc);
}

}  // namespace maoea
