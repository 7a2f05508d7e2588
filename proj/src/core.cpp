#include "maoea/core.hpp"

#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace maoea {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }

}  // namespace

RandomSource::RandomSource(std::uint64_t seed) : seed_(seed) {
    std::uint64_t s = seed;
    for (auto& w : state_) w = splitmix64(s);
}

std::uint64_t RandomSource::next_u64() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

double RandomSource::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RandomSource::uniform(double lo, double hi) {
    return lo + (hi - lo) * next_double();
}

std::uint64_t RandomSource::next_below(std::uint64_t n) {
    if (n == 0) throw ContractError("next_below: n must be positive");
    // rejection sampling keeps the draw unbiased
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
        const std::uint64_t r = next_u64();
        if (r >= threshold) return r % n;
    }
}

RandomSource RandomSource::split(std::uint64_t stream) const {
    std::uint64_t s = seed_ ^ 0xA5A5A5A5A5A5A5A5ULL;
    std::uint64_t a = splitmix64(s);
    s = a + stream;
    return RandomSource(splitmix64(s));
}

void Matrix::push_row(std::span<const double> r) {
    if (rows == 0 && cols == 0) cols = r.size();
    if (r.size() != cols)
        throw DimensionError("push_row: expected " + std::to_string(cols) +
                             " columns, got " + std::to_string(r.size()));
    data.insert(data.end(), r.begin(), r.end());
    ++rows;
}

std::optional<std::size_t> Bounds::first_violation(std::span<const double> x) const {
    if (x.size() != lower.size())
        throw DimensionError("decision has " + std::to_string(x.size()) +
                             " variables, bounds have " + std::to_string(lower.size()));
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (!(x[j] >= lower[j] && x[j] <= upper[j])) return j;
    }
    return std::nullopt;
}

double Individual::min_proximity() const {
    if (!ranked() || proximity.empty())
        throw ContractError("min_proximity on an unranked individual");
    double best = proximity[0];
    for (double v : proximity)
        if (v < best) best = v;
    return best;
}

std::vector<double> Problem::evaluate(std::span<const double> x) const {
    std::vector<double> f(static_cast<std::size_t>(num_objectives()));
    evaluate_into(x, f);
    return f;
}

bool dominates(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size())
        throw DimensionError("dominates: dimension mismatch (" + std::to_string(a.size()) +
                             " vs " + std::to_string(b.size()) + ")");
    bool strict = false;
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j] > b[j]) return false;
        if (a[j] < b[j]) strict = true;
    }
    return strict;
}

namespace {

Individual evaluate_one(const Problem& problem, const std::vector<double>& x,
                        std::size_t index) {
    if (auto bad = problem.bounds().first_violation(x)) {
        throw DomainError("decision " + std::to_string(index) + ": variable " +
                          std::to_string(*bad) + " out of bounds");
    }
    Individual ind;
    ind.x = x;
    ind.f = problem.evaluate(x);
    for (std::size_t j = 0; j < ind.f.size(); ++j) {
        if (!std::isfinite(ind.f[j]))
            throw DomainError("decision " + std::to_string(index) + ": objective " +
                              std::to_string(j) + " is not finite");
    }
    return ind;
}

}  // namespace

std::vector<Individual> evaluate_population_serial(const Problem& problem,
                                                   std::span<const std::vector<double>> decisions,
                                                   std::uint64_t& eval_counter) {
    std::vector<Individual> out(decisions.size());
    for (std::size_t i = 0; i < decisions.size(); ++i)
        out[i] = evaluate_one(problem, decisions[i], i);
    eval_counter += decisions.size();
    return out;
}

std::vector<Individual> evaluate_population(const Problem& problem,
                                            std::span<const std::vector<double>> decisions,
                                            std::uint64_t& eval_counter) {
    std::vector<Individual> out(decisions.size());
    std::exception_ptr first_error;
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(decisions.size()); ++i) {
        try {
            out[i] = evaluate_one(problem, decisions[i], static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical
            if (!first_error) first_error = std::current_exception();
        }
    }
    if (first_error) std::rethrow_exception(first_error);
    eval_counter += decisions.size();
    return out;
}

}  // namespace maoea
