#include "fpc/sweep.hpp"

#include <cmath>

#include "fpc/errors.hpp"
#include "fpc/numfmt.hpp"

namespace fpc {

namespace {

void check_grid(const std::vector<double>& grid, const char* name) {
    if (grid.empty())
        throw ValidationError(std::string(name) + " grid must not be empty");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!std::isfinite(grid[i]))
            throw ValidationError(std::string(name) + " grid has a non-finite value");
        if (i > 0 && !(grid[i] > grid[i - 1]))
            throw ValidationError(std::string(name) +
                                  " grid must be strictly increasing");
    }
}

}  // namespace

void CurveSpec::validate() const {
    const bool sweep_i = variable != SweepVariable::most_likely;
    const bool sweep_mp = variable != SweepVariable::inertia;

    if (sweep_i) {
        check_grid(inertia_grid, "inertia");
        if (inertia_grid.front() < 0.0 || inertia_grid.back() > 1.0)
            throw ValidationError("inertia grid must lie within [0, 1]");
    } else if (!(fixed_inertia >= 0.0 && fixed_inertia <= 1.0)) {
        throw ValidationError("fixed inertia must lie in [0, 1]");
    }

    if (!std::isfinite(optimistic_h) || optimistic_h < 0.0 ||
        !std::isfinite(pessimistic_h) || pessimistic_h < optimistic_h)
        throw ValidationError("sweep estimates must satisfy 0 <= O <= P");

    if (sweep_mp) {
        check_grid(most_likely_grid, "most-likely");
        if (most_likely_grid.front() < optimistic_h ||
            most_likely_grid.back() > pessimistic_h)
            throw ValidationError("most-likely grid must lie within [O, P]");
    } else if (fixed_most_likely < optimistic_h ||
               fixed_most_likely > pessimistic_h) {
        throw ValidationError("fixed most-likely must lie within [O, P]");
    }

    if (k_values.empty()) throw ValidationError("at least one K value is required");
    for (double k : k_values)
        if (!std::isfinite(k) || k <= 0.0)
            throw ValidationError("K values must be positive");
    if (!std::isfinite(effort_factor) || effort_factor <= 0.0)
        throw ValidationError("effort factor C must be positive");
}

std::size_t CurveSpec::row_count() const {
    switch (variable) {
        case SweepVariable::inertia: return inertia_grid.size() * k_values.size();
        case SweepVariable::most_likely:
            return most_likely_grid.size() * k_values.size();
        case SweepVariable::both:
            return inertia_grid.size() * most_likely_grid.size() * k_values.size();
    }
    return 0;
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
    if (n == 0) return {};
    if (n == 1) return {lo};
    std::vector<double> grid(n);
    for (std::size_t j = 0; j < n; ++j) {
        // Endpoint-exact form; keeps pretty decimals like 0.3 on round grids.
        grid[j] = (lo * static_cast<double>(n - 1 - j) + hi * static_cast<double>(j)) /
                  static_cast<double>(n - 1);
    }
    return grid;
}

CurveSpec default_inertia_sweep() {
    CurveSpec spec;
    spec.variable = SweepVariable::inertia;
    spec.inertia_grid = linspace(0.0, 1.0, 11);
    spec.k_values = {0.5, 1.0, 2.0};
    spec.effort_factor = 5.8;
    spec.fixed_most_likely = 6.0;
    spec.optimistic_h = 2.0;
    spec.pessimistic_h = 8.0;
    return spec;
}

CurveSpec default_surface_sweep() {
    CurveSpec spec;
    spec.variable = SweepVariable::both;
    spec.inertia_grid = linspace(0.0, 1.0, 11);
    spec.most_likely_grid = linspace(1.0, 20.0, 20);
    spec.k_values = {0.5, 1.0, 2.0};
    spec.effort_factor = 5.8;
    spec.optimistic_h = 1.0;
    spec.pessimistic_h = 20.0;
    return spec;
}

namespace {

// Pure per-row evaluation; inputs were validated up front.
SweepRow eval_row(const CurveSpec& spec, double inertia, double mp, double k) {
    const CountContext ctx{spec.effort_factor, inertia, k};
    const EstimateTriple est =
        EstimateTriple::from_hours(spec.optimistic_h, mp, spec.pessimistic_h);
    return {inertia, mp, k, count_points(ctx, est).points, potential(ctx, est)};
}

// Flattened grid coordinates in emission order: K outer, inertia, then MP.
SweepRow eval_flat(const CurveSpec& spec, std::size_t flat) {
    switch (spec.variable) {
        case SweepVariable::inertia: {
            const std::size_t n = spec.inertia_grid.size();
            return eval_row(spec, spec.inertia_grid[flat % n],
                            spec.fixed_most_likely, spec.k_values[flat / n]);
        }
        case SweepVariable::most_likely: {
            const std::size_t n = spec.most_likely_grid.size();
            return eval_row(spec, spec.fixed_inertia, spec.most_likely_grid[flat % n],
                            spec.k_values[flat / n]);
        }
        case SweepVariable::both: {
            const std::size_t nmp = spec.most_likely_grid.size();
            const std::size_t ni = spec.inertia_grid.size();
            const std::size_t mp_idx = flat % nmp;
            const std::size_t i_idx = (flat / nmp) % ni;
            const std::size_t k_idx = flat / (nmp * ni);
            return eval_row(spec, spec.inertia_grid[i_idx],
                            spec.most_likely_grid[mp_idx], spec.k_values[k_idx]);
        }
    }
    return {};
}

}  // namespace

std::vector<SweepRow> sweep_serial(const CurveSpec& spec) {
    spec.validate();
    const std::size_t n = spec.row_count();
    std::vector<SweepRow> rows(n);
    for (std::size_t flat = 0; flat < n; ++flat) rows[flat] = eval_flat(spec, flat);
    return rows;
}

std::vector<SweepRow> sweep_parallel(const CurveSpec& spec) {
    spec.validate();
    const std::size_t n = spec.row_count();
    std::vector<SweepRow> rows(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (long long flat = 0; flat < static_cast<long long>(n); ++flat)
        rows[static_cast<std::size_t>(flat)] =
            eval_flat(spec, static_cast<std::size_t>(flat));
    return rows;
}

std::vector<SweepRow> sweep(const CurveSpec& spec) {
#ifdef _OPENMP
    return sweep_parallel(spec);
#else
    return sweep_serial(spec);
#endif
}

std::string render_sweep(const CurveSpec& spec, const std::vector<SweepRow>& rows) {
    std::string out;
    if (spec.variable == SweepVariable::both) {
        out = "i,mp,K,N,V\n";
        for (const SweepRow& row : rows) {
            out += format_shortest(row.inertia);
            out += ',';
            out += format_shortest(row.most_likely);
            out += ',';
            out += format_shortest(row.k);
            out += ',';
            out += format_shortest(row.points);
            out += ',';
            out += format_shortest(row.potential);
            out += '\n';
        }
        return out;
    }

    const bool by_inertia = spec.variable == SweepVariable::inertia;
    out = "sweep_var,value,K,N,V\n";
    for (const SweepRow& row : rows) {
        out += by_inertia ? "inertia" : "most_likely";
        out += ',';
        out += format_shortest(by_inertia ? row.inertia : row.most_likely);
        out += ',';
        out += format_shortest(row.k);
        out += ',';
        out += format_shortest(row.points);
        out += ',';
        out += format_shortest(row.potential);
        out += '\n';
    }
    return out;
}

}  // namespace fpc
