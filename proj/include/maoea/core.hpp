#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace maoea {

// ---------------------------------------------------------------------------
// Error taxonomy. The CLI maps ConfigError/UnsupportedError to exit code 2
// and IoError to exit code 3; everything else is a bug.
// ---------------------------------------------------------------------------
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};
class DimensionError : public Error {
public:
    using Error::Error;
};
class DomainError : public Error {
public:
    using Error::Error;
};
class ConfigError : public Error {
public:
    using Error::Error;
};
class ContractError : public Error {
public:
    using Error::Error;
};
class UnsupportedError : public Error {
public:
    using Error::Error;
};
class IoError : public Error {
public:
    using Error::Error;
};

// ---------------------------------------------------------------------------
// Deterministic random source: xoshiro256** seeded through splitmix64.
// The generator algorithm is fixed so that a seed yields the same draw
// sequence on every platform. Child sources for parallel work are derived
// from (seed, stream) and are independent of thread scheduling.
// ---------------------------------------------------------------------------
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed);

    std::uint64_t next_u64();
    /// Uniform double in [0, 1) with 53 random bits.
    double next_double();
    double uniform(double lo, double hi);
    /// Unbiased uniform integer in [0, n); n must be positive.
    std::uint64_t next_below(std::uint64_t n);
    /// Child source derived from this source's seed and a stream index.
    RandomSource split(std::uint64_t stream) const;

    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t seed_ = 0;
    std::array<std::uint64_t, 4> state_{};
};

// ---------------------------------------------------------------------------
// Dense row-major matrix of doubles. Used for point sets (rows = points),
// proximity matrices and assignment costs.
// ---------------------------------------------------------------------------
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, double fill = 0.0)
        : rows(r), cols(c), data(r * c, fill) {}

    double& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    double at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    std::span<double> row(std::size_t i) { return {data.data() + i * cols, cols}; }
    std::span<const double> row(std::size_t i) const {
        return {data.data() + i * cols, cols};
    }

    void push_row(std::span<const double> r);
    bool operator==(const Matrix&) const = default;
};

// ---------------------------------------------------------------------------
// Domain types
// ---------------------------------------------------------------------------

/// Rank classes assigned against the reference set; R1 < R2 < R3.
enum class RankClass : int { R1 = 1, R2 = 2, R3 = 3 };

struct Bounds {
    std::vector<double> lower;
    std::vector<double> upper;

    std::size_t size() const { return lower.size(); }
    /// Index of the first out-of-bounds variable, or nullopt if x is feasible.
    std::optional<std::size_t> first_violation(std::span<const double> x) const;
};

struct Individual {
    std::vector<double> x;  // decision variables
    std::vector<double> f;  // objective values
    std::optional<RankClass> rank;
    std::vector<double> proximity;  // signed distances to the k reference points

    bool ranked() const { return rank.has_value(); }
    /// Smallest entry of the proximity row; ContractError when unranked.
    double min_proximity() const;
};

/// Minimization-only problem abstraction. evaluate_into must be pure,
/// deterministic and reentrant.
class Problem {
public:
    virtual ~Problem() = default;

    virtual const std::string& name() const = 0;
    virtual int num_objectives() const = 0;
    virtual int num_variables() const = 0;
    virtual const Bounds& bounds() const = 0;
    virtual void evaluate_into(std::span<const double> x, std::span<double> f) const = 0;

    /// Known ideal/nadir objective vectors; populated for benchmarks with a
    /// published ground truth, absent otherwise.
    virtual std::optional<std::vector<double>> known_ideal() const { return std::nullopt; }
    virtual std::optional<std::vector<double>> known_nadir() const { return std::nullopt; }

    std::vector<double> evaluate(std::span<const double> x) const;
};

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

/// Pareto dominance, minimization: a <= b component-wise with at least one
/// strict improvement. Throws DimensionError on length mismatch.
bool dominates(std::span<const double> a, std::span<const double> b);

/// Evaluate a batch of in-bounds decisions; increments eval_counter by the
/// batch size. Throws DomainError naming the offending decision/variable when
/// a decision is out of bounds. The parallel variant is bit-identical to the
/// serial one for any thread count.
std::vector<Individual> evaluate_population(const Problem& problem,
                                            std::span<const std::vector<double>> decisions,
                                            std::uint64_t& eval_counter);
std::vector<Individual> evaluate_population_serial(const Problem& problem,
                                                   std::span<const std::vector<double>> decisions,
                                                   std::uint64_t& eval_counter);

}  // namespace maoea
