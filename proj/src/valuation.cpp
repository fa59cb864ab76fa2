#include "fpc/valuation.hpp"

#include <cmath>

#include "fpc/errors.hpp"

namespace fpc {

double value_points(double points, double unit_price) {
    return static_cast<double>(std::llround(points * unit_price * 100.0)) / 100.0;
}

namespace {

// Valuation core once the unit price is known; pure, does not throw for
// lines that passed sheet validation.
ValuedLine value_core(const CountLine& line, double unit_price,
                      double min_spread_ratio) {
    ValuedLine valued;
    valued.line = line;
    valued.unit_price = unit_price;
    valued.effective = line.flags.min_spread
                           ? enforce_min_spread(line.est, min_spread_ratio)
                           : line.est;
    valued.zero_spread_warning = line.flags.min_spread &&
                                 line.est.optimistic().hours() == 0.0 &&
                                 line.est.pessimistic().hours() == 0.0;
    valued.effective_amount =
        line.flags.volume ? quantity_bucket(*line.flags.volume) : line.amount;
    valued.points_per_unit = count_points(line.ctx, valued.effective).points;
    valued.total_points =
        valued.points_per_unit * static_cast<double>(valued.effective_amount);
    valued.total_value = valued.total_points * unit_price;
    valued.deflated_value = valued.total_value / line.deflation;
    return valued;
}

void validate_line_terms(const CountLine& line) {
    if (line.amount < 1)
        throw ValidationError("line '" + line.id + "': amount must be at least 1");
    if (!std::isfinite(line.deflation) || line.deflation < 1.0)
        throw ValidationError("line '" + line.id + "': deflation must be >= 1");
    line.ctx.validate();
}

}  // namespace

ValuedLine value_line(const CountLine& line, const PriceSchedule& prices,
                      double min_spread_ratio) {
    validate_line_terms(line);
    return value_core(line, prices.unit_value(line.price_class), min_spread_ratio);
}

ReportTotals total_report(std::span<const ValuedLine> lines) {
    if (lines.empty()) throw DomainError("no counting lines");
    ReportTotals totals;
    for (const ValuedLine& line : lines) {
        totals.points += line.total_points;
        totals.value += line.total_value;
        totals.deflated += line.deflated_value;
    }
    return totals;
}

std::vector<ValuedLine> value_sheet_serial(std::span<const CountLine> lines,
                                           const PriceSchedule& prices,
                                           double min_spread_ratio) {
    std::vector<double> unit_prices(lines.size());
    for (std::size_t i = 0; i < lines.size(); ++i) {
        validate_line_terms(lines[i]);
        unit_prices[i] = prices.unit_value(lines[i].price_class);
    }
    std::vector<ValuedLine> out(lines.size());
    for (std::size_t i = 0; i < lines.size(); ++i)
        out[i] = value_core(lines[i], unit_prices[i], min_spread_ratio);
    return out;
}

std::vector<ValuedLine> value_sheet_parallel(std::span<const CountLine> lines,
                                             const PriceSchedule& prices,
                                             double min_spread_ratio) {
    // Lookups and validation stay serial so the parallel loop cannot throw.
    std::vector<double> unit_prices(lines.size());
    for (std::size_t i = 0; i < lines.size(); ++i) {
        validate_line_terms(lines[i]);
        unit_prices[i] = prices.unit_value(lines[i].price_class);
    }
    std::vector<ValuedLine> out(lines.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (long long i = 0; i < static_cast<long long>(lines.size()); ++i) {
        const auto idx = static_cast<std::size_t>(i);
        out[idx] = value_core(lines[idx], unit_prices[idx], min_spread_ratio);
    }
    return out;
}

std::vector<ValuedLine> value_sheet(std::span<const CountLine> lines,
                                    const PriceSchedule& prices,
                                    double min_spread_ratio) {
#ifdef _OPENMP
    return value_sheet_parallel(lines, prices, min_spread_ratio);
#else
    return value_sheet_serial(lines, prices, min_spread_ratio);
#endif
}

}  // namespace fpc
