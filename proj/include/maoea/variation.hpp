#pragma once

#include <span>
#include <utility>

#include "maoea/core.hpp"

namespace maoea {

struct VariationConfig {
    double crossover_prob = 1.0;
    double mutation_prob = -1.0;  // negative means 1/n, resolved at call time
    double sbx_eta = 20.0;
    double mutation_eta = 20.0;
    int gene_pool_size = 0;     // 0 means population size rounded down to even
    int children_per_pair = 2;  // 1 keeps a random child of each pair

    void validate() const;
    double resolved_mutation_prob(int n) const;
    int resolved_pool_size(int population) const;
};

/// Simulated binary crossover. Per-variable crossover with probability 0.5
/// inside a pair-level crossover_prob gate; the unbounded spread factor keeps
/// child_a + child_b = parent_a + parent_b per variable, then children are
/// clamped to the bounds.
std::pair<std::vector<double>, std::vector<double>> sbx(std::span<const double> parent_a,
                                                        std::span<const double> parent_b,
                                                        const Bounds& bounds,
                                                        const VariationConfig& cfg,
                                                        RandomSource& rng);

/// Bounded polynomial mutation with distribution index mutation_eta.
std::vector<double> polynomial_mutation(std::span<const double> x, const Bounds& bounds,
                                        const VariationConfig& cfg, RandomSource& rng);

/// Binary tournaments (smaller rank wins, tie broken by smaller minimal
/// proximity distance, then by a fair coin) until the pool holds g members.
/// Returns indices into the population.
std::vector<std::size_t> fill_gene_pool(std::span<const Individual> population, int g,
                                        RandomSource& rng);

/// Drain the gene pool in random pairs through SBX + mutation. Output size is
/// (g/2) * children_per_pair; decisions are unevaluated.
std::vector<std::vector<double>> generate_offspring(std::span<const Individual> population,
                                                    const Bounds& bounds,
                                                    const VariationConfig& cfg,
                                                    RandomSource& rng);

}  // namespace maoea
