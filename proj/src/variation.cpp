#include "maoea/variation.hpp"

#include <algorithm>
#include <cmath>

namespace maoea {

namespace {
constexpr double kSbxEps = 1e-14;  // coincident parents are copied unchanged

double clamp(double v, double lo, double hi) { return std::min(std::max(v, lo), hi); }
}  // namespace

void VariationConfig::validate() const {
    if (crossover_prob < 0.0 || crossover_prob > 1.0)
        throw ConfigError("crossover_prob must lie in [0,1]");
    if (mutation_prob > 1.0) throw ConfigError("mutation_prob must lie in [0,1]");
    if (sbx_eta <= 0.0 || mutation_eta <= 0.0)
        throw ConfigError("distribution indices must be positive");
    if (gene_pool_size < 0 || gene_pool_size % 2 != 0)
        throw ConfigError("gene_pool_size must be even");
    if (children_per_pair != 1 && children_per_pair != 2)
        throw ConfigError("children_per_pair must be 1 or 2");
}

double VariationConfig::resolved_mutation_prob(int n) const {
    return mutation_prob < 0.0 ? 1.0 / n : mutation_prob;
}

int VariationConfig::resolved_pool_size(int population) const {
    if (gene_pool_size > 0) return gene_pool_size;
    return population - population % 2;
}

std::pair<std::vector<double>, std::vector<double>> sbx(std::span<const double> parent_a,
                                                        std::span<const double> parent_b,
                                                        const Bounds& bounds,
                                                        const VariationConfig& cfg,
                                                        RandomSource& rng) {
    if (parent_a.size() != parent_b.size() || parent_a.size() != bounds.size())
        throw DimensionError("sbx: parents and bounds disagree on variable count");

    std::vector<double> a(parent_a.begin(), parent_a.end());
    std::vector<double> b(parent_b.begin(), parent_b.end());
    if (rng.next_double() > cfg.crossover_prob) return {std::move(a), std::move(b)};

    for (std::size_t j = 0; j < a.size(); ++j) {
        if (rng.next_double() > 0.5) continue;
        if (std::abs(a[j] - b[j]) < kSbxEps) continue;

        const double u = rng.next_double();
        const double exponent = 1.0 / (cfg.sbx_eta + 1.0);
        const double betaq = (u <= 0.5) ? std::pow(2.0 * u, exponent)
                                        : std::pow(1.0 / (2.0 * (1.0 - u)), exponent);
        const double mean = 0.5 * (a[j] + b[j]);
        const double spread = 0.5 * betaq * (b[j] - a[j]);
        double c1 = mean - spread;
        double c2 = mean + spread;
        if (rng.next_double() <= 0.5) std::swap(c1, c2);
        a[j] = clamp(c1, bounds.lower[j], bounds.upper[j]);
        b[j] = clamp(c2, bounds.lower[j], bounds.upper[j]);
    }
    return {std::move(a), std::move(b)};
}

std::vector<double> polynomial_mutation(std::span<const double> x, const Bounds& bounds,
                                        const VariationConfig& cfg, RandomSource& rng) {
    if (x.size() != bounds.size())
        throw DimensionError("polynomial_mutation: bounds disagree on variable count");

    const double pm = cfg.resolved_mutation_prob(static_cast<int>(x.size()));
    const double eta = cfg.mutation_eta;
    std::vector<double> out(x.begin(), x.end());
    for (std::size_t j = 0; j < out.size(); ++j) {
        if (rng.next_double() > pm) continue;
        const double lo = bounds.lower[j];
        const double hi = bounds.upper[j];
        if (hi <= lo) continue;

        const double y = out[j];
        const double delta1 = (y - lo) / (hi - lo);
        const double delta2 = (hi - y) / (hi - lo);
        const double u = rng.next_double();
        const double mut_pow = 1.0 / (eta + 1.0);
        double deltaq;
        if (u <= 0.5) {
            const double xy = 1.0 - delta1;
            const double val = 2.0 * u + (1.0 - 2.0 * u) * std::pow(xy, eta + 1.0);
            deltaq = std::pow(val, mut_pow) - 1.0;
        } else {
            const double xy = 1.0 - delta2;
            const double val = 2.0 * (1.0 - u) + 2.0 * (u - 0.5) * std::pow(xy, eta + 1.0);
            deltaq = 1.0 - std::pow(val, mut_pow);
        }
        out[j] = clamp(y + deltaq * (hi - lo), lo, hi);
    }
    return out;
}

std::vector<std::size_t> fill_gene_pool(std::span<const Individual> population, int g,
                                        RandomSource& rng) {
    if (population.empty()) throw ContractError("fill_gene_pool: empty population");
    for (const auto& ind : population) {
        if (!ind.ranked())
            throw ContractError("fill_gene_pool: population contains an unranked individual");
    }

    std::vector<std::size_t> pool;
    pool.reserve(g);
    const std::uint64_t q = population.size();
    while (static_cast<int>(pool.size()) < g) {
        const std::size_t i = rng.next_below(q);
        const std::size_t j = rng.next_below(q);
        const Individual& x1 = population[i];
        const Individual& x2 = population[j];
        std::size_t winner;
        if (*x1.rank != *x2.rank) {
            winner = (*x1.rank < *x2.rank) ? i : j;
        } else {
            const double d1 = x1.min_proximity();
            const double d2 = x2.min_proximity();
            if (d1 < d2)
                winner = i;
            else if (d2 < d1)
                winner = j;
            else
                winner = (rng.next_double() < 0.5) ? i : j;
        }
        pool.push_back(winner);
    }
    return pool;
}

std::vector<std::vector<double>> generate_offspring(std::span<const Individual> population,
                                                    const Bounds& bounds,
                                                    const VariationConfig& cfg,
                                                    RandomSource& rng) {
    cfg.validate();
    const int g = cfg.resolved_pool_size(static_cast<int>(population.size()));
    if (g < 2) throw ContractError("generate_offspring: gene pool needs at least one pair");

    std::vector<std::size_t> pool = fill_gene_pool(population, g, rng);

    // Drawing random pairs without replacement == Fisher-Yates shuffle, then
    // consuming the pool two at a time.
    for (std::size_t i = pool.size() - 1; i > 0; --i) {
        const std::size_t j = rng.next_below(i + 1);
        std::swap(pool[i], pool[j]);
    }

    std::vector<std::vector<double>> offspring;
    offspring.reserve(static_cast<std::size_t>(g / 2) * cfg.children_per_pair);
    for (int p = 0; p + 1 < g; p += 2) {
        const Individual& pa = population[pool[p]];
        const Individual& pb = population[pool[p + 1]];
        auto [c1, c2] = sbx(pa.x, pb.x, bounds, cfg, rng);
        c1 = polynomial_mutation(c1, bounds, cfg, rng);
        c2 = polynomial_mutation(c2, bounds, cfg, rng);
        if (cfg.children_per_pair == 2) {
            offspring.push_back(std::move(c1));
            offspring.push_back(std::move(c2));
        } else {
            offspring.push_back(rng.next_double() < 0.5 ? std::move(c1) : std::move(c2));
        }
    }
    return offspring;
}

}  // namespace maoea
