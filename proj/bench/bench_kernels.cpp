// Timing comparison of the serial reference kernels against the OpenMP
// variants, over sweep grids and synthetic counting sheets.
#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "fpc/builtin_data.hpp"
#include "fpc/factors.hpp"
#include "fpc/sweep.hpp"
#include "fpc/valuation.hpp"

namespace {

using Clock = std::chrono::steady_clock;

template <typename F>
double time_best_of(int repetitions, F&& run) {
    double best = 1e300;
    for (int rep = 0; rep < repetitions; ++rep) {
        const auto start = Clock::now();
        run();
        const std::chrono::duration<double> elapsed = Clock::now() - start;
        best = std::min(best, elapsed.count());
    }
    return best;
}

fpc::CurveSpec big_surface(std::size_t inertia_points, std::size_t mp_points) {
    fpc::CurveSpec spec = fpc::default_surface_sweep();
    spec.inertia_grid = fpc::linspace(0.0, 1.0, inertia_points);
    spec.most_likely_grid = fpc::linspace(1.0, 20.0, mp_points);
    return spec;
}

std::vector<fpc::CountLine> synthetic_sheet(std::size_t n) {
    std::mt19937 gen(42);
    std::uniform_real_distribution<double> c_dist(1.2, 5.8);
    std::uniform_real_distribution<double> i_dist(0.0, 1.0);
    std::uniform_real_distribution<double> o_dist(0.5, 40.0);
    std::uniform_real_distribution<double> span_dist(0.0, 30.0);
    std::uniform_int_distribution<long long> amount_dist(1, 200);

    std::vector<fpc::CountLine> lines(n);
    for (std::size_t idx = 0; idx < n; ++idx) {
        fpc::CountLine& line = lines[idx];
        line.id = "L" + std::to_string(idx);
        line.ctx = {c_dist(gen), i_dist(gen), 1.0};
        const double o = o_dist(gen);
        const double p = o + span_dist(gen);
        const double mp = o + (p - o) * 0.5;
        line.est = fpc::EstimateTriple::from_hours(o, mp, p);
        line.amount = amount_dist(gen);
        line.price_class = idx % 2 ? "new_implementation" : "adequation";
        line.deflation = idx % 3 ? 1.0 : 2.0;
        line.flags.min_spread = idx % 4 == 0;
    }
    return lines;
}

void report(const char* name, std::size_t rows, double serial_s, double parallel_s) {
    std::printf("%-28s %10zu rows  serial %8.3f ms  parallel %8.3f ms  speedup %5.2fx\n",
                name, rows, serial_s * 1e3, parallel_s * 1e3, serial_s / parallel_s);
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled; parallel kernels run serially\n");
#endif

    constexpr int kReps = 3;

    for (const auto& [ni, nmp] : {std::pair<std::size_t, std::size_t>{101, 2000},
                                  {501, 4000}}) {
        const fpc::CurveSpec spec = big_surface(ni, nmp);
        std::vector<fpc::SweepRow> sink;
        const double serial_s =
            time_best_of(kReps, [&] { sink = fpc::sweep_serial(spec); });
        const double parallel_s =
            time_best_of(kReps, [&] { sink = fpc::sweep_parallel(spec); });
        report("surface sweep", spec.row_count(), serial_s, parallel_s);
    }

    const fpc::FactorTables tables =
        fpc::load_factor_tables(fpc::builtin_factors_json());
    for (std::size_t n : {100000UL, 1000000UL}) {
        const auto lines = synthetic_sheet(n);
        std::vector<fpc::ValuedLine> sink;
        const double serial_s = time_best_of(
            kReps, [&] { sink = fpc::value_sheet_serial(lines, tables.prices); });
        const double parallel_s = time_best_of(
            kReps, [&] { sink = fpc::value_sheet_parallel(lines, tables.prices); });
        report("sheet valuation", n, serial_s, parallel_s);
    }
    return 0;
}
