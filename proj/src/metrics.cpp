#include "maoea/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "maoea/problems.hpp"

namespace maoea {

namespace {

double point_distance(std::span<const double> p, std::span<const double> y, bool plus) {
    double acc = 0.0;
    if (plus) {
        for (std::size_t j = 0; j < p.size(); ++j) {
            const double diff = std::max(y[j] - p[j], 0.0);
            acc += diff * diff;
        }
    } else {
        for (std::size_t j = 0; j < p.size(); ++j) {
            const double diff = y[j] - p[j];
            acc += diff * diff;
        }
    }
    return std::sqrt(acc);
}

double nearest_distance(std::span<const double> p, const Matrix& front, bool plus) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < front.rows; ++i) {
        const double d = point_distance(p, front.row(i), plus);
        if (d < best) best = d;
    }
    return best;
}

void check_igd_inputs(const Matrix& reference, const Matrix& front) {
    if (reference.rows == 0 || front.rows == 0)
        throw ContractError("igd: reference and front must be non-empty");
    if (reference.cols != front.cols)
        throw DimensionError("igd: reference and front dimension mismatch");
}

}  // namespace

double igd_serial(const Matrix& reference, const Matrix& front, bool plus) {
    check_igd_inputs(reference, front);
    std::vector<double> per_ref(reference.rows);
    for (std::size_t i = 0; i < reference.rows; ++i)
        per_ref[i] = nearest_distance(reference.row(i), front, plus);
    // fixed-order reduction keeps the result independent of scheduling
    double sum = 0.0;
    for (double d : per_ref) sum += d;
    return sum / static_cast<double>(reference.rows);
}

double igd(const Matrix& reference, const Matrix& front, bool plus) {
    check_igd_inputs(reference, front);
    std::vector<double> per_ref(reference.rows);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(reference.rows); ++i)
        per_ref[i] = nearest_distance(reference.row(i), front, plus);
    double sum = 0.0;
    for (double d : per_ref) sum += d;
    return sum / static_cast<double>(reference.rows);
}

// ---------------------------------------------------------------------------
// Exact hypervolume by recursive dimension sweep with per-level dominance
// pruning. Adequate for m <= 8 and desk-scale fronts.
// ---------------------------------------------------------------------------
namespace {

using PointList = std::vector<std::vector<double>>;

bool weakly_dominates(std::span<const double> a, std::span<const double> b, std::size_t dims) {
    for (std::size_t j = 0; j < dims; ++j) {
        if (a[j] > b[j]) return false;
    }
    return true;
}

// Keep the non-dominated subset of `pts` considering the first `dims` coords.
PointList prune(PointList pts, std::size_t dims) {
    PointList kept;
    kept.reserve(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < pts.size() && !dominated; ++j) {
            if (i == j) continue;
            if (weakly_dominates(pts[j], pts[i], dims) &&
                !weakly_dominates(pts[i], pts[j], dims))
                dominated = true;
            // exact duplicates: keep the first occurrence only
            if (j < i && weakly_dominates(pts[j], pts[i], dims) &&
                weakly_dominates(pts[i], pts[j], dims))
                dominated = true;
        }
        if (!dominated) kept.push_back(pts[i]);
    }
    return kept;
}

double hv_recursive(PointList pts, std::span<const double> ref, std::size_t dims) {
    if (pts.empty()) return 0.0;
    if (dims == 1) {
        double best = pts[0][0];
        for (const auto& p : pts) best = std::min(best, p[0]);
        return ref[0] - best;
    }
    const std::size_t last = dims - 1;
    std::sort(pts.begin(), pts.end(),
              [last](const auto& a, const auto& b) { return a[last] < b[last]; });

    double volume = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const double slab_lo = pts[i][last];
        const double slab_hi = (i + 1 < pts.size()) ? pts[i + 1][last] : ref[last];
        if (slab_hi <= slab_lo) continue;
        PointList slice(pts.begin(), pts.begin() + i + 1);
        volume += (slab_hi - slab_lo) * hv_recursive(prune(std::move(slice), last), ref, last);
    }
    return volume;
}

}  // namespace

double hv_exact(const Matrix& front, std::span<const double> ref_point) {
    const std::size_t m = ref_point.size();
    if (m > 8)
        throw UnsupportedError("hv_exact is guarded to m <= 8; use hv_monte_carlo");
    if (front.rows > 0 && front.cols != m)
        throw DimensionError("hv_exact: front and reference point dimension mismatch");

    PointList pts;
    for (std::size_t i = 0; i < front.rows; ++i) {
        auto row = front.row(i);
        bool inside = true;
        for (std::size_t j = 0; j < m; ++j) {
            if (!(row[j] < ref_point[j])) {
                inside = false;
                break;
            }
        }
        if (inside) pts.emplace_back(row.begin(), row.end());
    }
    return hv_recursive(prune(std::move(pts), m), ref_point, m);
}

// ---------------------------------------------------------------------------
// Monte Carlo hypervolume, sharded into fixed blocks so the estimate is
// bit-identical for any thread count.
// ---------------------------------------------------------------------------
namespace {

constexpr std::uint64_t kHvBlock = 65536;

std::uint64_t hv_block_hits(const PointList& pts, std::span<const double> lower,
                            std::span<const double> extent, std::uint64_t count,
                            RandomSource rng) {
    const std::size_t m = lower.size();
    std::vector<double> y(m);
    std::uint64_t hits = 0;
    for (std::uint64_t s = 0; s < count; ++s) {
        for (std::size_t j = 0; j < m; ++j) y[j] = lower[j] + extent[j] * rng.next_double();
        for (const auto& p : pts) {
            bool dom = true;
            for (std::size_t j = 0; j < m; ++j) {
                if (p[j] > y[j]) {
                    dom = false;
                    break;
                }
            }
            if (dom) {
                ++hits;
                break;
            }
        }
    }
    return hits;
}

PointList mc_candidate_points(const Matrix& front, std::span<const double> ref_point) {
    PointList pts;
    for (std::size_t i = 0; i < front.rows; ++i) {
        auto row = front.row(i);
        bool inside = true;
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (row[j] > ref_point[j]) {
                inside = false;
                break;
            }
        }
        if (inside) pts.emplace_back(row.begin(), row.end());
    }
    // most-dominant-first ordering speeds up the hit test
    std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
        return std::accumulate(a.begin(), a.end(), 0.0) <
               std::accumulate(b.begin(), b.end(), 0.0);
    });
    return pts;
}

double hv_monte_carlo_impl(const Matrix& front, std::span<const double> ref_point,
                           std::span<const double> lower, std::uint64_t samples,
                           const RandomSource& rng, bool parallel) {
    const std::size_t m = ref_point.size();
    if (lower.size() != m)
        throw DimensionError("hv_monte_carlo: lower and reference point dimension mismatch");
    for (std::size_t j = 0; j < m; ++j) {
        if (!(lower[j] < ref_point[j]))
            throw DomainError("hv_monte_carlo: lower must be strictly below the reference point");
    }
    if (front.rows > 0 && front.cols != m)
        throw DimensionError("hv_monte_carlo: front dimension mismatch");
    if (samples == 0) throw ConfigError("hv_monte_carlo: sample count must be positive");

    const PointList pts = mc_candidate_points(front, ref_point);
    double box = 1.0;
    std::vector<double> extent(m);
    for (std::size_t j = 0; j < m; ++j) {
        extent[j] = ref_point[j] - lower[j];
        box *= extent[j];
    }
    if (pts.empty()) return 0.0;

    const std::uint64_t blocks = (samples + kHvBlock - 1) / kHvBlock;
    std::vector<std::uint64_t> hits(blocks, 0);
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(blocks); ++b) {
            const std::uint64_t count =
                std::min(kHvBlock, samples - static_cast<std::uint64_t>(b) * kHvBlock);
            hits[b] = hv_block_hits(pts, lower, extent, count, rng.split(b));
        }
    } else {
        for (std::uint64_t b = 0; b < blocks; ++b) {
            const std::uint64_t count = std::min(kHvBlock, samples - b * kHvBlock);
            hits[b] = hv_block_hits(pts, lower, extent, count, rng.split(b));
        }
    }
    std::uint64_t total = 0;
    for (std::uint64_t h : hits) total += h;
    return box * static_cast<double>(total) / static_cast<double>(samples);
}

}  // namespace

double hv_monte_carlo(const Matrix& front, std::span<const double> ref_point,
                      std::span<const double> lower, std::uint64_t samples,
                      const RandomSource& rng) {
    return hv_monte_carlo_impl(front, ref_point, lower, samples, rng, true);
}

double hv_monte_carlo_serial(const Matrix& front, std::span<const double> ref_point,
                             std::span<const double> lower, std::uint64_t samples,
                             const RandomSource& rng) {
    return hv_monte_carlo_impl(front, ref_point, lower, samples, rng, false);
}

std::vector<double> hv_reference_point(const std::string& problem_id, int m) {
    const BenchmarkSpec spec = parse_benchmark_id(problem_id, m);
    std::vector<double> ref(m);
    if (spec.family == BenchmarkFamily::DTLZ && spec.index == 1) {
        std::fill(ref.begin(), ref.end(), 1.0);
    } else if (spec.family == BenchmarkFamily::DTLZ && spec.index <= 6) {
        std::fill(ref.begin(), ref.end(), 2.0);
    } else {
        for (int j = 0; j < m; ++j) ref[j] = 2.0 * (j + 1) + 1.0;  // 3, 5, ..., 2m+1
    }
    return ref;
}

IndicatorResult hv_normalized(const Matrix& front, const std::string& problem_id, int m,
                              std::uint64_t samples, std::uint64_t seed) {
    const auto ref = hv_reference_point(problem_id, m);
    double box = 1.0;
    for (double r : ref) box *= r;  // HV of the origin: the enclosing box volume

    IndicatorResult result;
    result.name = "hv_normalized";
    if (m <= 8) {
        result.value = hv_exact(front, ref) / box;
    } else {
        const std::vector<double> lower(m, 0.0);
        RandomSource rng(seed);
        result.value = hv_monte_carlo(front, ref, lower, samples, rng) / box;
        result.sample_count = samples;
    }
    return result;
}

// ---------------------------------------------------------------------------
// Mann-Whitney-Wilcoxon rank-sum test
// ---------------------------------------------------------------------------
namespace {

// Midranks of the pooled samples; returns ranks aligned with `pooled`.
std::vector<double> midranks(const std::vector<double>& pooled) {
    const std::size_t n = pooled.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return pooled[a] < pooled[b]; });
    std::vector<double> ranks(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && pooled[order[j + 1]] == pooled[order[i]]) ++j;
        const double mid = 0.5 * (static_cast<double>(i + 1) + static_cast<double>(j + 1));
        for (std::size_t t = i; t <= j; ++t) ranks[order[t]] = mid;
        i = j + 1;
    }
    return ranks;
}

double u_from_ranksum(double rank_sum, std::size_t na) {
    return rank_sum - static_cast<double>(na) * (na + 1) / 2.0;
}

// Exact two-sided p by exhausting all C(n, na) label assignments on the
// pooled midranks: fraction of assignments at least as far from the mean.
double exact_two_sided_p(const std::vector<double>& ranks, std::size_t na, double u_obs) {
    const std::size_t n = ranks.size();
    const double mu = static_cast<double>(na) * (n - na) / 2.0;
    const double dev = std::abs(u_obs - mu);

    std::vector<std::size_t> comb(na);
    std::iota(comb.begin(), comb.end(), 0);
    std::uint64_t total = 0, extreme = 0;
    for (;;) {
        double rs = 0.0;
        for (std::size_t idx : comb) rs += ranks[idx];
        ++total;
        if (std::abs(u_from_ranksum(rs, na) - mu) >= dev - 1e-12) ++extreme;

        // next combination in lexicographic order
        std::size_t i = na;
        while (i > 0 && comb[i - 1] == n - na + i - 1) --i;
        if (i == 0) break;
        ++comb[i - 1];
        for (std::size_t j = i; j < na; ++j) comb[j] = comb[j - 1] + 1;
    }
    return static_cast<double>(extreme) / static_cast<double>(total);
}

}  // namespace

RankSumResult rank_sum_test(std::span<const double> sample_a, std::span<const double> sample_b) {
    const std::size_t na = sample_a.size();
    const std::size_t nb = sample_b.size();
    if (na < 2 || nb < 2) throw ConfigError("rank_sum_test: both samples need size >= 2");

    std::vector<double> pooled(sample_a.begin(), sample_a.end());
    pooled.insert(pooled.end(), sample_b.begin(), sample_b.end());
    const std::vector<double> ranks = midranks(pooled);

    double rank_sum_a = 0.0;
    for (std::size_t i = 0; i < na; ++i) rank_sum_a += ranks[i];
    const double u = u_from_ranksum(rank_sum_a, na);

    RankSumResult result;
    result.u_statistic = u;

    const std::size_t n = na + nb;
    if (n <= 20) {
        result.exact = true;
        result.p_value = exact_two_sided_p(ranks, na, u);
        return result;
    }

    // Normal approximation with tie correction.
    std::vector<double> sorted(pooled);
    std::sort(sorted.begin(), sorted.end());
    double tie_term = 0.0;
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && sorted[j + 1] == sorted[i]) ++j;
        const double t = static_cast<double>(j - i + 1);
        tie_term += t * t * t - t;
        i = j + 1;
    }
    const double mu = static_cast<double>(na) * nb / 2.0;
    const double var = static_cast<double>(na) * nb / 12.0 *
                       ((n + 1) - tie_term / (static_cast<double>(n) * (n - 1)));
    if (var <= 0.0) {
        result.p_value = 1.0;  // all pooled values identical
        return result;
    }
    const double z = (u - mu) / std::sqrt(var);
    result.p_value = std::min(1.0, std::erfc(std::abs(z) / std::sqrt(2.0)));
    return result;
}

Matrix objectives_of(std::span<const Individual> population) {
    Matrix out;
    for (const auto& ind : population) out.push_row(ind.f);
    return out;
}

}  // namespace maoea
