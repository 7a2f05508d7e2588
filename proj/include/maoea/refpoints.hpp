#pragma once

#include <span>

#include "maoea/core.hpp"

namespace maoea {

enum class RefSource { UnitSimplex, Utopian };

/// Structured reference points. Rows are points in canonical (lexicographic
/// by composition) order, so downstream "uniformly select A reference
/// points" is reproducible.
struct ReferencePointSet {
    int m = 0;
    RefSource source = RefSource::UnitSimplex;
    Matrix points;  // k x m

    std::size_t size() const { return points.rows; }
};

struct LayerConfig {
    int outer_divisions = 0;
    int inner_divisions = 0;  // 0 disables the inner layer
    double shrink = 0.5;      // inner-layer pull toward the simplex centroid
};

/// Simplex-lattice design: all compositions of `divisions` parts into m bins,
/// divided by `divisions`. Count is C(divisions + m - 1, m - 1).
ReferencePointSet das_dennis(int m, int divisions);

/// Outer layer plus an inner layer shrunk toward the centroid
/// (w' = (1 - shrink)/m + shrink * w); duplicate rows within 1e-12 removed.
ReferencePointSet two_layer(int m, const LayerConfig& cfg);

/// Affine map of unit-simplex rows onto the Utopian front spanned between
/// ideal and nadir. Requires ideal_j < nadir_j for every component.
ReferencePointSet to_utopian(const ReferencePointSet& points,
                             std::span<const double> ideal,
                             std::span<const double> nadir);

/// Exact binomial coefficient (used for lattice sizing; modest arguments).
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace maoea
