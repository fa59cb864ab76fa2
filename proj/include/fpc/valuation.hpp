#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fpc/catalog.hpp"
#include "fpc/counting.hpp"
#include "fpc/factors.hpp"

namespace fpc {

struct LineFlags {
    bool min_spread = false;                  // apply the anti-aberration rule
    std::optional<long long> volume;          // raw item count; bucketed amount
    // Annotation binding the line to a catalog entry; checked by validate.
    std::optional<std::pair<std::string, ComplexityLevel>> task_ref;
};

// One counting row of a sheet: context + estimate + commercial terms.
struct CountLine {
    std::string id;
    std::string description;
    CountContext ctx;
    EstimateTriple est;
    long long amount = 1;      // >= 1
    std::string price_class;
    double deflation = 1.0;    // >= 1, divides the billed value
    LineFlags flags;
    std::size_t source_row = 0;  // 1-based line number in the sheet file
};

// A priced line. All monetary fields are full-precision doubles; rounding
// happens at the reporting boundary only.
struct ValuedLine {
    CountLine line;
    EstimateTriple effective;      // after min-spread, when flagged
    long long effective_amount = 1;
    double unit_price = 0.0;
    double points_per_unit = 0.0;  // N
    double total_points = 0.0;     // N * effective_amount
    double total_value = 0.0;      // total_points * unit_price
    double deflated_value = 0.0;   // total_value / deflation
    bool zero_spread_warning = false;  // min-spread on an all-zero triple
};

// N * unit_price rounded half-up to 2 decimals.
double value_points(double points, double unit_price);

// Prices one line. Throws LookupError for an unknown price class.
ValuedLine value_line(const CountLine& line, const PriceSchedule& prices,
                      double min_spread_ratio = 0.20);

struct ReportTotals {
    double points = 0.0;
    double value = 0.0;
    double deflated = 0.0;
};

// Column sums at full precision, in input order. Throws DomainError when
// the list is empty.
ReportTotals total_report(std::span<const ValuedLine> lines);

// Serial reference and OpenMP sheet valuation. Price classes are resolved
// up front (throwing there), so the parallel loop is pure computation and
// the two variants produce bit-identical results in input order.
std::vector<ValuedLine> value_sheet_serial(std::span<const CountLine> lines,
                                           const PriceSchedule& prices,
                                           double min_spread_ratio = 0.20);
std::vector<ValuedLine> value_sheet_parallel(std::span<const CountLine> lines,
                                             const PriceSchedule& prices,
                                             double min_spread_ratio = 0.20);
std::vector<ValuedLine> value_sheet(std::span<const CountLine> lines,
                                    const PriceSchedule& prices,
                                    double min_spread_ratio = 0.20);

}  // namespace fpc
