// Timing comparison of the OpenMP kernels against their serial reference
// implementations. Also verifies that both paths agree bit-for-bit.
#include <chrono>
#include <cstdio>
#include <functional>

#include "maoea/metrics.hpp"
#include "maoea/nadir.hpp"
#include "maoea/problems.hpp"
#include "maoea/ranking.hpp"
#include "maoea/refpoints.hpp"

using namespace maoea;

namespace {

double time_ms(const std::function<void()>& fn, int reps = 3) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto start = std::chrono::steady_clock::now();
        fn();
        const auto stop = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(stop - start).count());
    }
    return best;
}

void report(const char* kernel, double serial_ms, double parallel_ms, bool identical) {
    std::printf("%-22s %10.2f ms %10.2f ms %7.2fx   %s\n", kernel, serial_ms, parallel_ms,
                serial_ms / parallel_ms, identical ? "bit-identical" : "MISMATCH");
}

}  // namespace

int main() {
    std::printf("%-22s %13s %13s %9s\n", "kernel", "serial", "openmp", "speedup");

    {
        const auto problem = make_problem("dtlz2", 10);
        RandomSource rng(7);
        std::vector<std::vector<double>> decisions(20000);
        for (auto& x : decisions) {
            x.resize(problem->num_variables());
            for (auto& v : x) v = rng.next_double();
        }
        std::uint64_t c1 = 0, c2 = 0;
        std::vector<Individual> a, b;
        const double ts = time_ms([&] { a = evaluate_population_serial(*problem, decisions, c1); });
        const double tp = time_ms([&] { b = evaluate_population(*problem, decisions, c2); });
        bool same = a.size() == b.size();
        for (std::size_t i = 0; same && i < a.size(); ++i) same = a[i].f == b[i].f;
        report("evaluate_population", ts, tp, same);
    }

    {
        const auto problem = make_problem("dtlz2", 10);
        RandomSource rng(11);
        std::uint64_t counter = 0;
        std::vector<std::vector<double>> decisions(2000);
        for (auto& x : decisions) {
            x.resize(problem->num_variables());
            for (auto& v : x) v = rng.next_double();
        }
        auto pop_a = evaluate_population_serial(*problem, decisions, counter);
        auto pop_b = pop_a;
        const auto refs = to_utopian(das_dennis(10, 3), std::vector<double>(10, 0.0),
                                     std::vector<double>(10, 1.0));
        ProximityMatrix ma, mb;
        const double ts = time_ms([&] { ma = assign_all_serial(pop_a, refs); });
        const double tp = time_ms([&] { mb = assign_all(pop_b, refs); });
        report("assign_all", ts, tp, ma.d == mb.d && ma.row_rank == mb.row_rank);
    }

    {
        RandomSource rng(13);
        Matrix reference(5000, 10), front(2000, 10);
        for (auto& v : reference.data) v = rng.next_double();
        for (auto& v : front.data) v = rng.next_double();
        double a = 0, b = 0;
        const double ts = time_ms([&] { a = igd_serial(reference, front, false); });
        const double tp = time_ms([&] { b = igd(reference, front, false); });
        report("igd", ts, tp, a == b);
    }

    {
        RandomSource rng(17);
        Matrix front(100, 10);
        for (auto& v : front.data) v = rng.next_double();
        const std::vector<double> ref(10, 2.0), lower(10, 0.0);
        RandomSource mc(23);
        double a = 0, b = 0;
        const double ts =
            time_ms([&] { a = hv_monte_carlo_serial(front, ref, lower, 2000000, mc); });
        const double tp = time_ms([&] { b = hv_monte_carlo(front, ref, lower, 2000000, mc); });
        report("hv_monte_carlo", ts, tp, a == b);
    }

    {
        const auto problem = make_problem("dtlz2", 8);
        DnpeConfig cfg = DnpeConfig::benchmark_defaults(8);
        cfg.per_extreme_tolerance = 0.0;  // fixed work: run the full budget
        cfg.per_extreme_eval_budget = 2000;
        NadirReport ra, rb;
        RandomSource r1(31), r2(31);
        const double ts = time_ms([&] { ra = run_dnpe_serial(*problem, cfg, r1); }, 1);
        const double tp = time_ms([&] { rb = run_dnpe(*problem, cfg, r2); }, 1);
        report("run_dnpe", ts, tp, ra.nadir == rb.nadir && ra.ideal == rb.ideal);
    }

    return 0;
}
