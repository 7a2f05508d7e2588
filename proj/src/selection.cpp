#include "maoea/selection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace maoea {

namespace {

// Hungarian method with row/column potentials and shortest augmenting paths,
// O(n^3) on a square matrix. Handles negative costs.
std::vector<std::size_t> hungarian_square(const Matrix& a) {
    const int n = static_cast<int>(a.rows);
    constexpr double kInf = std::numeric_limits<double>::infinity();

    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
    std::vector<int> p(n + 1, 0), way(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<double> minv(n + 1, kInf);
        std::vector<char> used(n + 1, 0);
        do {
            used[j0] = 1;
            const int i0 = p[j0];
            int j1 = -1;
            double delta = kInf;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const double cur = a.at(i0 - 1, j - 1) - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0);
    }

    std::vector<std::size_t> row_to_col(n, 0);
    for (int j = 1; j <= n; ++j) {
        if (p[j] > 0) row_to_col[p[j] - 1] = static_cast<std::size_t>(j - 1);
    }
    return row_to_col;
}

}  // namespace

std::vector<std::size_t> solve_lap(const LapInstance& instance) {
    const std::size_t a = instance.cost.rows;
    const std::size_t b = instance.cost.cols;
    if (a == 0) throw ContractError("solve_lap: empty instance");
    if (a > b)
        throw ConfigError("solve_lap: infeasible instance (" + std::to_string(a) + " rows > " +
                          std::to_string(b) + " columns)");
    for (double c : instance.cost.data) {
        if (!std::isfinite(c)) throw DomainError("solve_lap: cost matrix contains non-finite entry");
    }

    // Pad with zero-cost dummy rows; they never affect the real rows' optimum.
    Matrix square(b, b, 0.0);
    for (std::size_t i = 0; i < a; ++i) {
        auto src = instance.cost.row(i);
        std::copy(src.begin(), src.end(), square.row(i).begin());
    }

    auto full = hungarian_square(square);
    full.resize(a);
    return full;
}

std::vector<std::size_t> select_reference_subset(const ReferencePointSet& refs, int a,
                                                 RandomSource& rng, bool randomized) {
    const int k = static_cast<int>(refs.size());
    if (a < 1 || a > k)
        throw ConfigError("select_reference_subset: need 1 <= A <= k, got A=" +
                          std::to_string(a) + ", k=" + std::to_string(k));

    if (randomized) {
        std::vector<std::size_t> all(k);
        std::iota(all.begin(), all.end(), 0);
        for (int t = 0; t < a; ++t) {
            const std::size_t j = t + rng.next_below(static_cast<std::uint64_t>(k - t));
            std::swap(all[t], all[j]);
        }
        all.resize(a);
        std::sort(all.begin(), all.end());
        return all;
    }

    // Deterministic even stride over the canonical row order.
    std::vector<std::size_t> picks;
    picks.reserve(a);
    for (int t = 0; t < a; ++t) {
        std::size_t idx = static_cast<std::size_t>(t) * k / a;
        while (!picks.empty() && idx <= picks.back()) ++idx;  // dedup by advancing
        picks.push_back(idx);
    }
    return picks;
}

std::vector<Individual> environmental_select(std::span<const Individual> unioned,
                                             const ReferencePointSet& refs, int slots,
                                             RandomSource& rng) {
    if (slots < 0 || static_cast<std::size_t>(slots) > unioned.size())
        throw ConfigError("environmental_select: slots exceed the union size");

    std::array<std::vector<std::size_t>, 3> fronts;
    for (std::size_t i = 0; i < unioned.size(); ++i) {
        if (!unioned[i].ranked() || unioned[i].proximity.size() != refs.size())
            throw ContractError("environmental_select: individual " + std::to_string(i) +
                                " lacks rank or proximity row");
        fronts[static_cast<int>(*unioned[i].rank) - 1].push_back(i);
    }

    std::vector<Individual> survivors;
    survivors.reserve(slots);
    int level = 0;
    while (level < 3 &&
           survivors.size() + fronts[level].size() < static_cast<std::size_t>(slots)) {
        for (std::size_t idx : fronts[level]) survivors.push_back(unioned[idx]);
        ++level;
    }
    if (survivors.size() == static_cast<std::size_t>(slots)) return survivors;

    const auto& boundary = fronts[level];
    if (survivors.size() + boundary.size() == static_cast<std::size_t>(slots)) {
        for (std::size_t idx : boundary) survivors.push_back(unioned[idx]);
        return survivors;
    }

    const int a = slots - static_cast<int>(survivors.size());
    const auto ref_subset = select_reference_subset(refs, a, rng);

    LapInstance lap;
    lap.cost = Matrix(a, boundary.size());
    for (int r = 0; r < a; ++r) {
        for (std::size_t c = 0; c < boundary.size(); ++c)
            lap.cost.at(r, c) = unioned[boundary[c]].proximity[ref_subset[r]];
    }
    const auto matched = solve_lap(lap);
    for (int r = 0; r < a; ++r) survivors.push_back(unioned[boundary[matched[r]]]);
    return survivors;
}

}  // namespace maoea
