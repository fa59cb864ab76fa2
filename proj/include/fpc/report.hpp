#pragma once

#include <span>
#include <string>

#include "fpc/counting.hpp"
#include "fpc/valuation.hpp"

namespace fpc {

enum class OutputFormat { table, csv, json };

struct ReportOptions {
    OutputFormat format = OutputFormat::table;
    bool stamp = false;  // timestamps are opt-in; default output is byte-stable
    std::string currency_label = "R$";
};

// Count report: one row per valued line plus a TOTAL row. Points print with
// 4 decimals and currency with 2 (half-up) in table and csv form; the json
// form carries full-precision numbers so that re-totaling the parsed lines
// reproduces the totals exactly.
std::string render_count_report(std::span<const ValuedLine> lines,
                                const ReportTotals& totals,
                                const ReportOptions& options);

struct GaugeReport {
    std::string line_id;
    std::string description;
    double points = 0.0;           // original N per unit
    double marginal = 0.0;         // dN/dMP, points per hour
    double hours = 0.0;            // H
    GaugeDirection direction = GaugeDirection::add;
    double gauged_points = 0.0;    // adjusted N per unit
    double unit_price = 0.0;
    double gauged_value = 0.0;     // value_points(gauged_points, unit_price)
};

std::string render_gauge_report(const GaugeReport& report, const ReportOptions& options);

}  // namespace fpc
