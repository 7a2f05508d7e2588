#include "maoea/ranking.hpp"

#include <cmath>

namespace maoea {

namespace {

double euclidean(std::span<const double> y, std::span<const double> p) {
    double acc = 0.0;
    for (std::size_t l = 0; l < y.size(); ++l) {
        const double diff = y[l] - p[l];
        acc += diff * diff;
    }
    return std::sqrt(acc);
}

double truncated(std::span<const double> y, std::span<const double> p) {
    double acc = 0.0;
    for (std::size_t l = 0; l < y.size(); ++l) {
        const double diff = std::max(y[l] - p[l], 0.0);
        acc += diff * diff;
    }
    return std::sqrt(acc);
}

void check_refs(std::span<const double> y, const ReferencePointSet& refs) {
    if (refs.size() == 0) throw ContractError("reference set is empty");
    if (refs.source != RefSource::Utopian)
        throw ContractError("ranking requires a Utopian reference set");
    if (y.size() != static_cast<std::size_t>(refs.m))
        throw DimensionError("objective vector length does not match reference set");
}

}  // namespace

RankClass rank_individual(std::span<const double> y, const ReferencePointSet& refs) {
    check_refs(y, refs);
    bool dominates_some = false;
    bool dominated_by_some = false;
    for (std::size_t j = 0; j < refs.size(); ++j) {
        const auto p = refs.points.row(j);
        if (dominates(y, p))
            dominates_some = true;
        else if (dominates(p, y))
            dominated_by_some = true;
    }
    if (dominates_some) return RankClass::R1;
    if (!dominated_by_some) return RankClass::R2;
    return RankClass::R3;
}

std::vector<double> proximity_row(std::span<const double> y, RankClass rank,
                                  const ReferencePointSet& refs) {
    check_refs(y, refs);
    if (rank != rank_individual(y, refs))
        throw ContractError("proximity_row: rank inconsistent with the reference set");

    std::vector<double> row(refs.size());
    for (std::size_t j = 0; j < refs.size(); ++j) {
        const auto p = refs.points.row(j);
        switch (rank) {
            case RankClass::R1: row[j] = -euclidean(y, p); break;
            case RankClass::R2: row[j] = truncated(y, p); break;
            case RankClass::R3: row[j] = euclidean(y, p); break;
        }
    }
    return row;
}

namespace {

// Shared row kernel: rank + distances in one pass over the reference points.
RankClass assign_one(const Individual& ind, const ReferencePointSet& refs,
                     std::span<double> row) {
    const std::span<const double> y(ind.f);
    bool dominates_some = false;
    bool dominated_by_some = false;
    for (std::size_t j = 0; j < refs.size(); ++j) {
        const auto p = refs.points.row(j);
        if (dominates(y, p))
            dominates_some = true;
        else if (dominates(p, y))
            dominated_by_some = true;
    }
    const RankClass rank = dominates_some
                               ? RankClass::R1
                               : (!dominated_by_some ? RankClass::R2 : RankClass::R3);
    for (std::size_t j = 0; j < refs.size(); ++j) {
        const auto p = refs.points.row(j);
        switch (rank) {
            case RankClass::R1: row[j] = -euclidean(y, p); break;
            case RankClass::R2: row[j] = truncated(y, p); break;
            case RankClass::R3: row[j] = euclidean(y, p); break;
        }
    }
    return rank;
}

}  // namespace

ProximityMatrix assign_all_serial(std::span<Individual> population,
                                  const ReferencePointSet& refs) {
    if (refs.size() == 0) throw ContractError("reference set is empty");
    if (refs.source != RefSource::Utopian)
        throw ContractError("ranking requires a Utopian reference set");

    ProximityMatrix out;
    out.d = Matrix(population.size(), refs.size());
    out.row_rank.resize(population.size());
    for (std::size_t i = 0; i < population.size(); ++i) {
        if (population[i].f.size() != static_cast<std::size_t>(refs.m))
            throw DimensionError("individual " + std::to_string(i) +
                                 " objective length does not match reference set");
        out.row_rank[i] = assign_one(population[i], refs, out.d.row(i));
        population[i].rank = out.row_rank[i];
        population[i].proximity.assign(out.d.row(i).begin(), out.d.row(i).end());
    }
    out.dominance_comparisons = population.size() * refs.size();
    return out;
}

ProximityMatrix assign_all(std::span<Individual> population, const ReferencePointSet& refs) {
    if (refs.size() == 0) throw ContractError("reference set is empty");
    if (refs.source != RefSource::Utopian)
        throw ContractError("ranking requires a Utopian reference set");
    for (std::size_t i = 0; i < population.size(); ++i) {
        if (population[i].f.size() != static_cast<std::size_t>(refs.m))
            throw DimensionError("individual " + std::to_string(i) +
                                 " objective length does not match reference set");
    }

    ProximityMatrix out;
    out.d = Matrix(population.size(), refs.size());
    out.row_rank.resize(population.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(population.size()); ++i) {
        out.row_rank[i] = assign_one(population[i], refs, out.d.row(i));
        population[i].rank = out.row_rank[i];
        population[i].proximity.assign(out.d.row(i).begin(), out.d.row(i).end());
    }
    out.dominance_comparisons = population.size() * refs.size();
    return out;
}

}  // namespace maoea
