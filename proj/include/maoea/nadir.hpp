#pragma once

#include <span>

#include "maoea/core.hpp"

namespace maoea {

struct DnpeConfig {
    double lambda = 100.0;  // off-axis weight; must exceed 1
    int population = 200;
    std::uint64_t per_extreme_eval_budget = 0;  // fair per-axis share of the pool
    double per_extreme_tolerance = 0.0;         // <= 0 disables the error stop
    double crossover_prob = 0.9;
    double mutation_prob = -1.0;  // negative means 1/n
    double crossover_eta = 20.0;
    double mutation_eta = 20.0;
    // Offspring per generation (0 means population size). Small batches give
    // the elitist archive many more generations per evaluation, which the
    // multimodal distance landscapes need under tight budgets.
    int offspring_per_generation = 20;
    // Fraction of the total pool spent on a shared pre-phase minimizing the
    // objective norm; it settles the distance structure once so the axis
    // searches only move position variables.
    double pre_phase_fraction = 0.2;
    // Chain the axis searches: each is seeded with the previous population
    // (adjacent extreme points differ in few variables) and may borrow up to
    // four fair shares of the remaining pool. Disabling restores fully
    // independent axis searches capped at per_extreme_eval_budget, which can
    // run in parallel but needs far larger budgets to converge.
    bool warm_start = true;

    /// Nadir-benchmark settings: per-axis share 100000/m, per-axis error
    /// tolerance 0.01/m, population 200, SBX/mutation 0.9 and 1/n, eta 20.
    static DnpeConfig benchmark_defaults(int m);
    void validate() const;
};

struct NadirReport {
    std::vector<Individual> extremes;  // one per objective axis
    std::vector<double> nadir;         // nadir_i = extremes[i].f[i]
    std::vector<double> ideal;         // component-wise min over the extremes
    std::uint64_t evaluations = 0;
    std::optional<double> error;  // E, when the true nadir/ideal are known
    int axes_converged = 0;       // axes stopped by the error tolerance
};

struct ExtremePointResult {
    Individual best;
    std::uint64_t evaluations = 0;
    bool hit_tolerance = false;
};

/// Axis scalarization |y_i| + lambda * sum_{j != i} y_j^2.
double scalarize(std::span<const double> y, std::size_t axis, double lambda);

/// Single-objective GA (binary tournament on the scalarized fitness, SBX +
/// polynomial mutation, elitist truncation) minimizing scalarize(f(x), axis)
/// from a cold start. Stops on per_extreme_eval_budget, or earlier on the
/// per-axis error tolerance when the problem carries a known nadir/ideal.
ExtremePointResult estimate_extreme_point(const Problem& problem, std::size_t axis,
                                          const DnpeConfig& cfg, RandomSource& rng);

/// All m extreme-point searches under the shared pool of
/// m * per_extreme_eval_budget evaluations. With warm_start the axes chain
/// sequentially; without it they are independent and the parallel variant
/// distributes them across threads. Both variants are bit-deterministic.
NadirReport run_dnpe(const Problem& problem, const DnpeConfig& cfg, RandomSource& rng);
NadirReport run_dnpe_serial(const Problem& problem, const DnpeConfig& cfg, RandomSource& rng);

/// Normalized estimation error E = sqrt(sum_i ((nad_i - est_i)/(nad_i - ideal_i))^2).
double nadir_error(std::span<const double> estimated, std::span<const double> true_nadir,
                   std::span<const double> true_ideal);

}  // namespace maoea
