#pragma once

#include "maoea/core.hpp"
#include "maoea/nadir.hpp"
#include "maoea/refpoints.hpp"
#include "maoea/variation.hpp"

namespace maoea {

struct EngineConfig {
    std::string problem_id;
    int m = 0;
    LayerConfig layers;   // outer_divisions 0 resolves to a per-m default
    int population = 0;   // N; 0 resolves to the reference count k, must equal k otherwise
    std::uint64_t total_eval_budget = 0;
    double dnpe_budget_fraction = 0.2;  // cap on the DNPE share of the budget
    DnpeConfig dnpe;                    // per_extreme_eval_budget 0 resolves to 100000/m
    VariationConfig variation;
    std::uint64_t seed = 0;
    bool track_igd = true;  // per-generation IGD when an analytic front exists
    int igd_front_samples = 5000;

    /// Fill derived defaults and check the invariants (N = k, budget > DNPE
    /// share). Returns the reference count k.
    EngineConfig resolved() const;
};

/// Default two-layer divisions per objective count (the published table for
/// m in {8, 15, 20}, single layer or comparable sizes elsewhere).
LayerConfig default_layers_for(int m);

struct GenerationStats {
    std::uint64_t evaluations = 0;  // cumulative at the end of the generation
    double best_min_proximity = 0.0;
    double mean_min_proximity = 0.0;
    int r1 = 0, r2 = 0, r3 = 0;
    std::optional<double> igd_value;
};

struct RunRecord {
    std::string algorithm;  // "maoea-igd" or "random-baseline"
    EngineConfig config;
    std::optional<NadirReport> nadir;
    std::vector<GenerationStats> generations;
    std::vector<Individual> final_population;
    std::uint64_t total_evaluations = 0;
};

/// The full algorithm: DNPE -> Utopian reference set -> ranked gene-pool /
/// linear-assignment generational loop under the shared evaluation budget.
RunRecord run(const EngineConfig& config);

/// Budget-matched random search: uniform decisions, non-dominated filtering,
/// then crowding by minimal pairwise distance down to N.
RunRecord run_random_baseline(const EngineConfig& config);

}  // namespace maoea
