#include "maoea/refpoints.hpp"

#include <cmath>
#include <cstdlib>

namespace maoea {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;  // exact: product of i consecutive ints is divisible by i!
    }
    return result;
}

namespace {

// Lexicographic enumeration of all compositions of `divisions` into m parts.
void emit_compositions(int m, int divisions, int bin, std::vector<int>& parts,
                       Matrix& out, std::vector<double>& row) {
    if (bin == m - 1) {
        parts[bin] = divisions;
        for (int j = 0; j < m; ++j)
            row[j] = static_cast<double>(parts[j]);
        out.push_row(row);
        return;
    }
    for (int p = divisions; p >= 0; --p) {
        parts[bin] = p;
        emit_compositions(m, divisions - p, bin + 1, parts, out, row);
    }
}

}  // namespace

ReferencePointSet das_dennis(int m, int divisions) {
    if (m < 2) throw ConfigError("das_dennis: m must be >= 2");
    if (divisions < 1) throw ConfigError("das_dennis: divisions must be >= 1");

    Matrix pts(0, static_cast<std::size_t>(m));
    std::vector<int> parts(m, 0);
    std::vector<double> row(m, 0.0);
    emit_compositions(m, divisions, 0, parts, pts, row);
    for (double& v : pts.data) v /= divisions;

    ReferencePointSet set;
    set.m = m;
    set.source = RefSource::UnitSimplex;
    set.points = std::move(pts);
    return set;
}

ReferencePointSet two_layer(int m, const LayerConfig& cfg) {
    if (cfg.outer_divisions < 1) throw ConfigError("two_layer: outer divisions must be >= 1");
    if (cfg.inner_divisions < 0) throw ConfigError("two_layer: inner divisions must be >= 0");
    if (!(cfg.shrink > 0.0 && cfg.shrink < 1.0))
        throw ConfigError("two_layer: shrink must lie in (0,1)");

    ReferencePointSet outer = das_dennis(m, cfg.outer_divisions);
    if (cfg.inner_divisions == 0) return outer;

    ReferencePointSet inner = das_dennis(m, cfg.inner_divisions);
    const double offset = (1.0 - cfg.shrink) / m;
    for (double& v : inner.points.data) v = offset + cfg.shrink * v;

    Matrix merged = outer.points;
    for (std::size_t i = 0; i < inner.points.rows; ++i) {
        auto candidate = inner.points.row(i);
        bool duplicate = false;
        for (std::size_t r = 0; r < merged.rows && !duplicate; ++r) {
            auto existing = merged.row(r);
            bool same = true;
            for (int j = 0; j < m; ++j) {
                if (std::abs(existing[j] - candidate[j]) > 1e-12) {
                    same = false;
                    break;
                }
            }
            duplicate = same;
        }
        if (!duplicate) merged.push_row(candidate);
    }

    ReferencePointSet set;
    set.m = m;
    set.source = RefSource::UnitSimplex;
    set.points = std::move(merged);
    return set;
}

ReferencePointSet to_utopian(const ReferencePointSet& points,
                             std::span<const double> ideal,
                             std::span<const double> nadir) {
    if (points.source != RefSource::UnitSimplex)
        throw ContractError("to_utopian: input must be a unit-simplex set");
    const int m = points.m;
    if (ideal.size() != static_cast<std::size_t>(m) || nadir.size() != static_cast<std::size_t>(m))
        throw DimensionError("to_utopian: ideal/nadir length does not match m");
    for (int j = 0; j < m; ++j) {
        if (!(ideal[j] < nadir[j]))
            throw DomainError("to_utopian: degenerate range at objective " + std::to_string(j) +
                              " (ideal >= nadir)");
    }

    ReferencePointSet out;
    out.m = m;
    out.source = RefSource::Utopian;
    out.points = points.points;
    for (std::size_t i = 0; i < out.points.rows; ++i) {
        auto row = out.points.row(i);
        for (int j = 0; j < m; ++j)
            row[j] = row[j] * (nadir[j] - ideal[j]) + ideal[j];
    }
    return out;
}

}  // namespace maoea
