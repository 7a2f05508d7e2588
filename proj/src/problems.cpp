#include "maoea/problems.hpp"

#include <cmath>
#include <numbers>

namespace maoea {

namespace {
constexpr double kPi = std::numbers::pi;
}

int BenchmarkSpec::position_parameters() const { return m - 1; }

int BenchmarkSpec::distance_parameters() const {
    if (family == BenchmarkFamily::WFG) return 20;
    if (index == 1) return 5;
    if (index == 7) return 20;
    return 10;
}

int BenchmarkSpec::num_variables() const {
    return position_parameters() + distance_parameters();
}

std::string BenchmarkSpec::id() const {
    return (family == BenchmarkFamily::DTLZ ? "dtlz" : "wfg") + std::to_string(index);
}

BenchmarkSpec parse_benchmark_id(const std::string& id, int m) {
    if (m < 2) throw ConfigError("benchmark objective count must be >= 2, got " + std::to_string(m));
    BenchmarkSpec spec;
    spec.m = m;
    if (id.rfind("dtlz", 0) == 0 && id.size() == 5 && id[4] >= '1' && id[4] <= '7') {
        spec.family = BenchmarkFamily::DTLZ;
        spec.index = id[4] - '0';
        return spec;
    }
    if (id.rfind("wfg", 0) == 0 && id.size() == 4 && id[3] >= '1' && id[3] <= '9') {
        spec.family = BenchmarkFamily::WFG;
        spec.index = id[3] - '0';
        return spec;
    }
    throw ConfigError("unknown benchmark id '" + id + "'");
}

const std::vector<std::string>& benchmark_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (int i = 1; i <= 7; ++i) v.push_back("dtlz" + std::to_string(i));
        for (int i = 1; i <= 9; ++i) v.push_back("wfg" + std::to_string(i));
        return v;
    }();
    return ids;
}

// ---------------------------------------------------------------------------
// DTLZ test suite (Deb, Thiele, Laumanns, Zitzler)
// ---------------------------------------------------------------------------
namespace {

class DtlzProblem final : public Problem {
public:
    explicit DtlzProblem(const BenchmarkSpec& spec)
        : spec_(spec), name_(spec.id()), n_(spec.num_variables()) {
        bounds_.lower.assign(n_, 0.0);
        bounds_.upper.assign(n_, 1.0);
    }

    const std::string& name() const override { return name_; }
    int num_objectives() const override { return spec_.m; }
    int num_variables() const override { return n_; }
    const Bounds& bounds() const override { return bounds_; }

    std::optional<std::vector<double>> known_ideal() const override {
        if (spec_.index == 1 || spec_.index == 2)
            return std::vector<double>(spec_.m, 0.0);
        return std::nullopt;
    }
    std::optional<std::vector<double>> known_nadir() const override {
        if (spec_.index == 1) return std::vector<double>(spec_.m, 0.5);
        if (spec_.index == 2) return std::vector<double>(spec_.m, 1.0);
        return std::nullopt;
    }

    void evaluate_into(std::span<const double> x, std::span<double> f) const override {
        const int m = spec_.m;
        const int n = n_;
        const int k = spec_.distance_parameters();

        double g = 0.0;
        switch (spec_.index) {
            case 1:
            case 3: {
                for (int i = n - k; i < n; ++i) {
                    const double v = x[i] - 0.5;
                    g += v * v - std::cos(20.0 * kPi * v);
                }
                g = 100.0 * (k + g);
                break;
            }
            case 2:
            case 4:
            case 5: {
                for (int i = n - k; i < n; ++i) {
                    const double v = x[i] - 0.5;
                    g += v * v;
                }
                break;
            }
            case 6: {
                for (int i = n - k; i < n; ++i) g += std::pow(x[i], 0.1);
                break;
            }
            case 7: {
                for (int i = n - k; i < n; ++i) g += x[i];
                g = 1.0 + 9.0 / k * g;
                break;
            }
        }

        if (spec_.index == 1) {
            for (int j = 0; j < m; ++j) {
                double v = 0.5 * (1.0 + g);
                for (int i = 0; i < m - 1 - j; ++i) v *= x[i];
                if (j > 0) v *= 1.0 - x[m - 1 - j];
                f[j] = v;
            }
            return;
        }
        if (spec_.index == 7) {
            double h = m;
            for (int j = 0; j < m - 1; ++j) {
                f[j] = x[j];
                h -= f[j] / (1.0 + g) * (1.0 + std::sin(3.0 * kPi * f[j]));
            }
            f[m - 1] = (1.0 + g) * h;
            return;
        }

        // Angle-based families (DTLZ2-6)
        thread_local std::vector<double> theta;
        theta.assign(m - 1, 0.0);
        if (spec_.index == 5 || spec_.index == 6) {
            theta[0] = x[0] * kPi / 2.0;
            for (int i = 1; i < m - 1; ++i)
                theta[i] = kPi / (4.0 * (1.0 + g)) * (1.0 + 2.0 * g * x[i]);
        } else {
            const double alpha = (spec_.index == 4) ? 100.0 : 1.0;
            for (int i = 0; i < m - 1; ++i)
                theta[i] = std::pow(x[i], alpha) * kPi / 2.0;
        }
        for (int j = 0; j < m; ++j) {
            double v = 1.0 + g;
            for (int i = 0; i < m - 1 - j; ++i) v *= std::cos(theta[i]);
            if (j > 0) v *= std::sin(theta[m - 1 - j]);
            f[j] = v;
        }
    }

private:
    BenchmarkSpec spec_;
    std::string name_;
    int n_;
    Bounds bounds_;
};

// ---------------------------------------------------------------------------
// WFG test suite (Huband, Hingston, Barone, While). Transformation and shape
// functions follow the toolkit definitions; intermediates are clamped to
// [0,1] before composition to absorb floating-point drift.
// ---------------------------------------------------------------------------
namespace wfg {

double clamp01(double v) { return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v); }

double b_poly(double y, double alpha) { return clamp01(std::pow(y, alpha)); }

double b_flat(double y, double A, double B, double C) {
    const double v = A + std::min(0.0, std::floor(y - B)) * A * (B - y) / B -
                     std::min(0.0, std::floor(C - y)) * (1.0 - A) * (y - C) / (1.0 - C);
    return clamp01(v);
}

double b_param(double y, double u, double A, double B, double C) {
    const double v = A - (1.0 - 2.0 * u) * std::abs(std::floor(0.5 - u) + A);
    return clamp01(std::pow(y, B + (C - B) * v));
}

double s_linear(double y, double A) {
    return clamp01(std::abs(y - A) / std::abs(std::floor(A - y) + A));
}

double s_decept(double y, double A, double B, double C) {
    const double tmp1 = std::floor(y - A + B) * (1.0 - C + (A - B) / B) / (A - B);
    const double tmp2 = std::floor(A + B - y) * (1.0 - C + (1.0 - A - B) / B) / (1.0 - A - B);
    return clamp01(1.0 + (std::abs(y - A) - B) * (tmp1 + tmp2 + 1.0 / B));
}

double s_multi(double y, double A, double B, double C) {
    const double tmp1 = std::abs(y - C) / (2.0 * (std::floor(C - y) + C));
    const double tmp2 = (4.0 * A + 2.0) * kPi * (0.5 - tmp1);
    return clamp01((1.0 + std::cos(tmp2) + 4.0 * B * tmp1 * tmp1) / (B + 2.0));
}

double r_sum(std::span<const double> y, std::span<const double> w) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        num += w[i] * y[i];
        den += w[i];
    }
    return clamp01(num / den);
}

double r_nonsep(std::span<const double> y, int A) {
    const int n = static_cast<int>(y.size());
    double num = 0.0;
    for (int j = 0; j < n; ++j) {
        num += y[j];
        for (int k = 0; k <= A - 2; ++k) num += std::abs(y[j] - y[(j + k + 1) % n]);
    }
    const double half_up = std::ceil(A / 2.0);
    const double den = (n / static_cast<double>(A)) * half_up * (1.0 + 2.0 * A - 2.0 * half_up);
    return clamp01(num / den);
}

// Shape functions; mth is 1-based in 1..M, x has M-1 entries.
double linear(std::span<const double> x, int mth) {
    const int M = static_cast<int>(x.size()) + 1;
    double v = 1.0;
    for (int i = 1; i <= M - mth; ++i) v *= x[i - 1];
    if (mth > 1) v *= 1.0 - x[M - mth];
    return clamp01(v);
}

double convex(std::span<const double> x, int mth) {
    const int M = static_cast<int>(x.size()) + 1;
    double v = 1.0;
    for (int i = 1; i <= M - mth; ++i) v *= 1.0 - std::cos(x[i - 1] * kPi / 2.0);
    if (mth > 1) v *= 1.0 - std::sin(x[M - mth] * kPi / 2.0);
    return clamp01(v);
}

double concave(std::span<const double> x, int mth) {
    const int M = static_cast<int>(x.size()) + 1;
    double v = 1.0;
    for (int i = 1; i <= M - mth; ++i) v *= std::sin(x[i - 1] * kPi / 2.0);
    if (mth > 1) v *= std::cos(x[M - mth] * kPi / 2.0);
    return clamp01(v);
}

double mixed(double x1, int A, double alpha) {
    const double tmp = 2.0 * A * kPi;
    return clamp01(std::pow(1.0 - x1 - std::cos(tmp * x1 + kPi / 2.0) / tmp, alpha));
}

double disc(double x1, int A, double alpha, double beta) {
    const double tmp = std::cos(A * std::pow(x1, beta) * kPi);
    return clamp01(1.0 - std::pow(x1, alpha) * tmp * tmp);
}

}  // namespace wfg

class WfgProblem final : public Problem {
public:
    explicit WfgProblem(const BenchmarkSpec& spec)
        : spec_(spec), name_(spec.id()), n_(spec.num_variables()),
          k_(spec.position_parameters()), l_(spec.distance_parameters()) {
        bounds_.lower.assign(n_, 0.0);
        bounds_.upper.resize(n_);
        for (int i = 0; i < n_; ++i) bounds_.upper[i] = 2.0 * (i + 1);
    }

    const std::string& name() const override { return name_; }
    int num_objectives() const override { return spec_.m; }
    int num_variables() const override { return n_; }
    const Bounds& bounds() const override { return bounds_; }

    std::optional<std::vector<double>> known_ideal() const override {
        if (spec_.index == 2) return std::vector<double>(spec_.m, 0.0);
        return std::nullopt;
    }
    std::optional<std::vector<double>> known_nadir() const override {
        if (spec_.index == 2) {
            std::vector<double> nad(spec_.m);
            for (int j = 0; j < spec_.m; ++j) nad[j] = 2.0 * (j + 1);
            return nad;
        }
        return std::nullopt;
    }

    void evaluate_into(std::span<const double> z, std::span<double> f) const override {
        const int m = spec_.m;
        const int n = n_;
        const int k = k_;
        const int l = l_;

        thread_local std::vector<double> y, t, w, x;
        y.resize(n);
        for (int i = 0; i < n; ++i) y[i] = wfg::clamp01(z[i] / (2.0 * (i + 1)));

        switch (spec_.index) {
            case 1: {
                for (int i = k; i < n; ++i) y[i] = wfg::s_linear(y[i], 0.35);
                for (int i = k; i < n; ++i) y[i] = wfg::b_flat(y[i], 0.8, 0.75, 0.85);
                for (int i = 0; i < n; ++i) y[i] = wfg::b_poly(y[i], 0.02);
                t.resize(m);
                reduce_weighted(y, t, k, n);
                break;
            }
            case 2:
            case 3: {
                for (int i = k; i < n; ++i) y[i] = wfg::s_linear(y[i], 0.35);
                // pairwise non-separable reduction of the distance block
                t.assign(y.begin(), y.begin() + k);
                for (int i = k; i < k + l / 2; ++i) {
                    const double pair[2] = {y[k + 2 * (i - k)], y[k + 2 * (i - k) + 1]};
                    t.push_back(wfg::r_nonsep(pair, 2));
                }
                y = t;
                t.resize(m);
                reduce_unit(y, t, k, k + l / 2);
                break;
            }
            case 4: {
                for (int i = 0; i < n; ++i) y[i] = wfg::s_multi(y[i], 30, 10, 0.35);
                t.resize(m);
                reduce_unit(y, t, k, n);
                break;
            }
            case 5: {
                for (int i = 0; i < n; ++i) y[i] = wfg::s_decept(y[i], 0.35, 0.001, 0.05);
                t.resize(m);
                reduce_unit(y, t, k, n);
                break;
            }
            case 6: {
                for (int i = k; i < n; ++i) y[i] = wfg::s_linear(y[i], 0.35);
                t.resize(m);
                reduce_nonsep(y, t, k, n);
                break;
            }
            case 7: {
                for (int i = 0; i < k; ++i) {
                    const double u = unit_mean(y, i + 1, n);
                    y[i] = wfg::b_param(y[i], u, 0.98 / 49.98, 0.02, 50.0);
                }
                for (int i = k; i < n; ++i) y[i] = wfg::s_linear(y[i], 0.35);
                t.resize(m);
                reduce_unit(y, t, k, n);
                break;
            }
            case 8: {
                // the coupling term reads the pre-transformation vector
                thread_local std::vector<double> y0;
                y0 = y;
                for (int i = k; i < n; ++i) {
                    const double u = unit_mean(y0, 0, i);
                    y[i] = wfg::b_param(y[i], u, 0.98 / 49.98, 0.02, 50.0);
                }
                for (int i = k; i < n; ++i) y[i] = wfg::s_linear(y[i], 0.35);
                t.resize(m);
                reduce_unit(y, t, k, n);
                break;
            }
            case 9: {
                for (int i = 0; i < n - 1; ++i) {
                    const double u = unit_mean(y, i + 1, n);
                    y[i] = wfg::b_param(y[i], u, 0.98 / 49.98, 0.02, 50.0);
                }
                for (int i = 0; i < k; ++i) y[i] = wfg::s_decept(y[i], 0.35, 0.001, 0.05);
                for (int i = k; i < n; ++i) y[i] = wfg::s_multi(y[i], 30, 95, 0.35);
                t.resize(m);
                reduce_nonsep(y, t, k, n);
                break;
            }
        }

        // Degeneracy constants: all ones except WFG3 (linear degenerate front).
        x.resize(m);
        for (int j = 0; j < m - 1; ++j) {
            const double A = (spec_.index == 3 && j > 0) ? 0.0 : 1.0;
            x[j] = std::max(t[m - 1], A) * (t[j] - 0.5) + 0.5;
        }
        x[m - 1] = t[m - 1];

        const std::span<const double> pos(x.data(), m - 1);
        for (int j = 1; j <= m; ++j) {
            double h = 0.0;
            switch (spec_.index) {
                case 1:
                    h = (j < m) ? wfg::convex(pos, j) : wfg::mixed(x[0], 5, 1.0);
                    break;
                case 2:
                    h = (j < m) ? wfg::convex(pos, j) : wfg::disc(x[0], 5, 1.0, 1.0);
                    break;
                case 3:
                    h = wfg::linear(pos, j);
                    break;
                default:
                    h = wfg::concave(pos, j);
                    break;
            }
            f[j - 1] = x[m - 1] + 2.0 * j * h;
        }
    }

private:
    // r_sum over [head, tail) with unit weights.
    static double unit_mean(const std::vector<double>& y, int head, int tail) {
        thread_local std::vector<double> ones;
        ones.assign(tail - head, 1.0);
        return wfg::r_sum(std::span<const double>(y.data() + head, tail - head), ones);
    }

    // Position groups of size k/(m-1) with unit weights, plus the distance tail.
    void reduce_unit(const std::vector<double>& y, std::vector<double>& t, int k,
                     int tail) const {
        const int m = spec_.m;
        const int gap = k / (m - 1);
        for (int j = 0; j < m - 1; ++j) t[j] = unit_mean(y, j * gap, (j + 1) * gap);
        t[m - 1] = unit_mean(y, k, tail);
    }

    // WFG1 reduction: weights 2i on the 1-based variable index.
    void reduce_weighted(const std::vector<double>& y, std::vector<double>& t, int k,
                         int tail) const {
        const int m = spec_.m;
        const int gap = k / (m - 1);
        thread_local std::vector<double> w;
        auto weighted = [&](int head, int end) {
            w.resize(end - head);
            for (int i = head; i < end; ++i) w[i - head] = 2.0 * (i + 1);
            return wfg::r_sum(std::span<const double>(y.data() + head, end - head), w);
        };
        for (int j = 0; j < m - 1; ++j) t[j] = weighted(j * gap, (j + 1) * gap);
        t[m - 1] = weighted(k, tail);
    }

    // WFG6/9 reduction: non-separable position groups and distance tail.
    void reduce_nonsep(const std::vector<double>& y, std::vector<double>& t, int k,
                       int tail) const {
        const int m = spec_.m;
        const int gap = k / (m - 1);
        for (int j = 0; j < m - 1; ++j)
            t[j] = wfg::r_nonsep(std::span<const double>(y.data() + j * gap, gap), gap);
        t[m - 1] = wfg::r_nonsep(std::span<const double>(y.data() + k, tail - k), tail - k);
    }

    BenchmarkSpec spec_;
    std::string name_;
    int n_, k_, l_;
    Bounds bounds_;
};

}  // namespace

std::unique_ptr<Problem> make_problem(const BenchmarkSpec& spec) {
    if (spec.m < 2) throw ConfigError("benchmark objective count must be >= 2");
    if (spec.family == BenchmarkFamily::DTLZ) {
        if (spec.index < 1 || spec.index > 7)
            throw ConfigError("DTLZ index out of range: " + std::to_string(spec.index));
        return std::make_unique<DtlzProblem>(spec);
    }
    if (spec.index < 1 || spec.index > 9)
        throw ConfigError("WFG index out of range: " + std::to_string(spec.index));
    return std::make_unique<WfgProblem>(spec);
}

std::unique_ptr<Problem> make_problem(const std::string& id, int m) {
    return make_problem(parse_benchmark_id(id, m));
}

bool has_true_nadir(const BenchmarkSpec& spec) {
    if (spec.family == BenchmarkFamily::DTLZ) return spec.index == 1 || spec.index == 2;
    return spec.index == 2;
}

std::vector<double> true_nadir(const BenchmarkSpec& spec) {
    if (!has_true_nadir(spec))
        throw UnsupportedError("no published nadir point for " + spec.id());
    std::vector<double> nad(spec.m);
    if (spec.family == BenchmarkFamily::DTLZ) {
        const double v = spec.index == 1 ? 0.5 : 1.0;
        for (auto& e : nad) e = v;
    } else {
        for (int j = 0; j < spec.m; ++j) nad[j] = 2.0 * (j + 1);
    }
    return nad;
}

std::vector<double> true_ideal(const BenchmarkSpec& spec) {
    if (!has_true_nadir(spec))
        throw UnsupportedError("no published ideal point for " + spec.id());
    return std::vector<double>(spec.m, 0.0);
}

bool has_true_front(const BenchmarkSpec& spec) {
    return spec.family == BenchmarkFamily::DTLZ && (spec.index == 1 || spec.index == 2);
}

Matrix sample_true_front(const BenchmarkSpec& spec, int count, RandomSource& rng) {
    if (!has_true_front(spec))
        throw UnsupportedError("no analytic front sampler for " + spec.id());
    if (count < 0) throw ConfigError("sample_true_front: count must be >= 0");

    const int m = spec.m;
    Matrix out(static_cast<std::size_t>(count), static_cast<std::size_t>(m));
    std::vector<double> v(m);
    for (int i = 0; i < count; ++i) {
        double norm = 0.0;
        if (spec.index == 1) {
            // Dirichlet(1,...,1) scaled onto the sum-0.5 simplex
            for (int j = 0; j < m; ++j) {
                v[j] = -std::log(1.0 - rng.next_double());
                norm += v[j];
            }
            for (int j = 0; j < m; ++j) out.at(i, j) = 0.5 * v[j] / norm;
        } else {
            // |N(0,1)| direction normalized onto the unit sphere octant
            for (int j = 0; j < m; ++j) {
                const double u1 = 1.0 - rng.next_double();
                const double u2 = rng.next_double();
                v[j] = std::abs(std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2));
                norm += v[j] * v[j];
            }
            norm = std::sqrt(norm);
            for (int j = 0; j < m; ++j) out.at(i, j) = v[j] / norm;
        }
    }
    return out;
}

}  // namespace maoea
