#pragma once

#include <optional>
#include <span>
#include <string>

#include "maoea/core.hpp"

namespace maoea {

struct IndicatorResult {
    std::string name;  // igd, igd_plus, hv, hv_normalized
    double value = 0.0;
    std::optional<std::uint64_t> sample_count;  // Monte Carlo only
};

/// Mean over reference points of the nearest distance to the front; plus=true
/// replaces the Euclidean distance by the dominated-direction truncated one.
/// The parallel variant is bit-identical to the serial one.
double igd(const Matrix& reference, const Matrix& front, bool plus);
double igd_serial(const Matrix& reference, const Matrix& front, bool plus);

/// Lebesgue measure of the union of boxes [y, ref_point] by recursive
/// dimension sweep. Points not dominating ref_point are discarded. Guarded to
/// m <= 8; larger instances should use hv_monte_carlo.
double hv_exact(const Matrix& front, std::span<const double> ref_point);

/// Fraction of uniform samples in [lower, ref_point] dominated by the front,
/// scaled by the box volume. Sharded into fixed-size blocks with split random
/// sources, so the result is bit-identical for any thread count.
double hv_monte_carlo(const Matrix& front, std::span<const double> ref_point,
                      std::span<const double> lower, std::uint64_t samples,
                      const RandomSource& rng);
double hv_monte_carlo_serial(const Matrix& front, std::span<const double> ref_point,
                             std::span<const double> lower, std::uint64_t samples,
                             const RandomSource& rng);

/// HV under the benchmark protocol: reference point (1,..,1) for dtlz1,
/// (2,..,2) for dtlz2-6 and (3,5,..,2m+1) for dtlz7/wfg*, normalized by the
/// enclosing box volume. Uses the exact algorithm up to m = 8, Monte Carlo
/// with `samples` draws beyond that.
IndicatorResult hv_normalized(const Matrix& front, const std::string& problem_id, int m,
                              std::uint64_t samples = 1000000,
                              std::uint64_t seed = 0x9e3779b9u);

/// Reference point used by hv_normalized for a registry problem.
std::vector<double> hv_reference_point(const std::string& problem_id, int m);

struct RankSumResult {
    double u_statistic = 0.0;  // U of the first sample
    double p_value = 1.0;      // two-sided
    bool exact = false;
};

/// Mann-Whitney-Wilcoxon rank-sum test: exact enumeration for pooled sizes
/// up to 20, normal approximation with tie correction beyond.
RankSumResult rank_sum_test(std::span<const double> sample_a, std::span<const double> sample_b);

/// Objective rows of a population (helper for indicator calls).
Matrix objectives_of(std::span<const Individual> population);

}  // namespace maoea
