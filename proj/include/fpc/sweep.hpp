#pragma once

#include <string>
#include <vector>

#include "fpc/dynamics.hpp"

namespace fpc {

enum class SweepVariable { inertia, most_likely, both };

// Parameter grid for a curve emission: one swept variable (or the full
// inertia x MP surface), repeated for every K in k_values.
struct CurveSpec {
    SweepVariable variable = SweepVariable::inertia;
    std::vector<double> inertia_grid;      // used unless variable == most_likely
    std::vector<double> most_likely_grid;  // used unless variable == inertia
    std::vector<double> k_values;
    double effort_factor = 5.8;
    double fixed_inertia = 1.0;      // when sweeping most_likely only
    double fixed_most_likely = 6.0;  // when sweeping inertia only
    double optimistic_h = 2.0;
    double pessimistic_h = 8.0;

    void validate() const;  // throws ValidationError
    std::size_t row_count() const;
};

// n evenly spaced points from lo to hi (endpoints exact).
std::vector<double> linspace(double lo, double hi, std::size_t n);

// 11 inertia points x K in {0.5, 1, 2} over the (2, 6, 8) estimate: 33 rows.
CurveSpec default_inertia_sweep();
// 11 inertia x 20 MP x 3 K over O=1, P=20: 660 rows.
CurveSpec default_surface_sweep();

struct SweepRow {
    double inertia = 0.0;
    double most_likely = 0.0;
    double k = 1.0;
    double points = 0.0;     // N
    double potential = 0.0;  // V
};

// Serial reference evaluation, kept as the comparison baseline for the
// parallel kernel. Rows appear in grid order: K outer, inertia, then MP.
std::vector<SweepRow> sweep_serial(const CurveSpec& spec);

// OpenMP evaluation over the flattened grid. Bit-identical to sweep_serial:
// every row is an independent pure computation written to its own slot.
std::vector<SweepRow> sweep_parallel(const CurveSpec& spec);

// Parallel when compiled with OpenMP, serial otherwise.
std::vector<SweepRow> sweep(const CurveSpec& spec);

// Delimited text. Single-variable sweeps: header sweep_var,value,K,N,V.
// Surface sweeps need both coordinates per row: header i,mp,K,N,V.
// Numbers use shortest round-trip formatting, so rows re-check exactly
// against count_points/potential.
std::string render_sweep(const CurveSpec& spec, const std::vector<SweepRow>& rows);

}  // namespace fpc
