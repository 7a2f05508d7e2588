#pragma once

#include <span>

#include "maoea/core.hpp"
#include "maoea/refpoints.hpp"

namespace maoea {

/// Assignment instance: rows are selected reference points, columns are
/// boundary-front individuals; requires rows <= columns and finite entries.
struct LapInstance {
    Matrix cost;  // a x b, a <= b
};

/// Optimal min-cost assignment of every row to a distinct column.
/// Rectangular instances are padded with zero-cost dummy rows so the square
/// Hungarian solver applies unchanged. Returns the column matched to each row.
std::vector<std::size_t> solve_lap(const LapInstance& instance);

/// A reference indices by deterministic even stride over the canonical row
/// order: index_t = floor(t*k/A). The random source is only consumed in the
/// (non-default) randomized mode.
std::vector<std::size_t> select_reference_subset(const ReferencePointSet& refs, int a,
                                                 RandomSource& rng, bool randomized = false);

/// Environmental selection: copy whole fronts R1 -> R2 -> R3 while they fit;
/// resolve the partial boundary front by a linear assignment of individuals
/// to an evenly spread subset of reference points.
std::vector<Individual> environmental_select(std::span<const Individual> unioned,
                                             const ReferencePointSet& refs, int slots,
                                             RandomSource& rng);

}  // namespace maoea
