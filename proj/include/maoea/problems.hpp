#pragma once

#include <memory>
#include <string>

#include "maoea/core.hpp"

namespace maoea {

enum class BenchmarkFamily { DTLZ, WFG };

/// Benchmark identity plus the dimensioning rules:
/// DTLZ: n = k + m - 1 with k = 5 (DTLZ1), 10 (DTLZ2-6), 20 (DTLZ7);
/// WFG:  n = k + l with k = m - 1 position and l = 20 distance parameters.
struct BenchmarkSpec {
    BenchmarkFamily family = BenchmarkFamily::DTLZ;
    int index = 1;
    int m = 2;

    int num_variables() const;
    int position_parameters() const;  // WFG k (m - 1); DTLZ m - 1
    int distance_parameters() const;  // DTLZ k; WFG l
    std::string id() const;           // "dtlz1" .. "wfg9"
};

/// Parse a registry id ("dtlz1".."dtlz7", "wfg1".."wfg9"; lowercase, no
/// separators). Throws ConfigError for anything else.
BenchmarkSpec parse_benchmark_id(const std::string& id, int m);

std::unique_ptr<Problem> make_problem(const BenchmarkSpec& spec);
std::unique_ptr<Problem> make_problem(const std::string& id, int m);

/// All registry ids in canonical order.
const std::vector<std::string>& benchmark_ids();

/// Published nadir/ideal points; available for DTLZ1, DTLZ2 and WFG2 only.
bool has_true_nadir(const BenchmarkSpec& spec);
std::vector<double> true_nadir(const BenchmarkSpec& spec);
std::vector<double> true_ideal(const BenchmarkSpec& spec);

/// Uniform sample of the analytic Pareto front (DTLZ1: simplex with
/// coordinate sum 0.5; DTLZ2: unit sphere octant). Test/indicator oracle.
bool has_true_front(const BenchmarkSpec& spec);
Matrix sample_true_front(const BenchmarkSpec& spec, int count, RandomSource& rng);

}  // namespace maoea
