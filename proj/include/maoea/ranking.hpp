#pragma once

#include <span>

#include "maoea/core.hpp"
#include "maoea/refpoints.hpp"

namespace maoea {

/// Signed proximity distances of a population to the reference set.
/// Row sign pattern follows the rank class: R1 rows are non-positive
/// (negative Euclidean), R2 rows use the dominated-direction truncated
/// distance, R3 rows are plain Euclidean.
struct ProximityMatrix {
    Matrix d;  // q x k
    std::vector<RankClass> row_rank;
    // Instrumentation: dominance comparisons performed, at most q*k — ranking
    // never compares individuals pairwise within the population.
    std::uint64_t dominance_comparisons = 0;
};

/// R1 when y dominates at least one reference point, R2 when non-dominated to
/// every reference point, R3 otherwise.
RankClass rank_individual(std::span<const double> y, const ReferencePointSet& refs);

/// One proximity row for an already-ranked objective vector. The rank must be
/// consistent with rank_individual (ContractError otherwise).
std::vector<double> proximity_row(std::span<const double> y, RankClass rank,
                                  const ReferencePointSet& refs);

/// Rank every individual and attach its proximity row; matrix rows follow
/// population order. The parallel variant is bit-identical to the serial one.
ProximityMatrix assign_all(std::span<Individual> population, const ReferencePointSet& refs);
ProximityMatrix assign_all_serial(std::span<Individual> population,
                                  const ReferencePointSet& refs);

}  // namespace maoea
