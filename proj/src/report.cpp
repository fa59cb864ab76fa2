#include "fpc/report.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>

#include <json.hpp>

#include "fpc/csv.hpp"
#include "fpc/numfmt.hpp"

namespace fpc {

namespace {

std::string utc_stamp() {
    const std::time_t now =
        std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

struct Column {
    std::string title;
    bool right_align;
};

std::string pad(const std::string& text, std::size_t width, bool right) {
    if (text.size() >= width) return text;
    const std::string fill(width - text.size(), ' ');
    return right ? fill + text : text + fill;
}

std::string render_table(const std::vector<Column>& columns,
                         const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> widths(columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) widths[c] = columns[c].title.size();
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c)
            widths[c] = std::max(widths[c], row[c].size());

    std::string out;
    std::size_t total = 0;
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (c) {
            out += "  ";
            total += 2;
        }
        out += pad(columns[c].title, widths[c], columns[c].right_align);
        total += widths[c];
    }
    out += '\n';
    out += std::string(total, '-');
    out += '\n';
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) line += "  ";
            line += pad(row[c], widths[c], columns[c].right_align);
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line;
        out += '\n';
    }
    return out;
}

std::string count_table(std::span<const ValuedLine> lines, const ReportTotals& totals,
                        const ReportOptions& options) {
    const std::vector<Column> columns = {
        {"Counting", false},    {"C", true},          {"i", true},
        {"K", true},            {"O(h)", true},       {"MP(h)", true},
        {"P(h)", true},         {"Points/unity", true}, {"Point value", true},
        {"Amount", true},       {"Defl", true},       {"Tot value", true},
        {"Defl value", true},   {"Tot points", true}};

    std::vector<std::vector<std::string>> rows;
    for (const ValuedLine& v : lines) {
        std::string name = v.line.id + "- " + v.line.description;
        if (v.effective.corrected()) name += " *";
        rows.push_back({name,
                        format_shortest(v.line.ctx.effort_factor),
                        format_shortest(v.line.ctx.inertia),
                        format_shortest(v.line.ctx.adjustment),
                        format_shortest(v.effective.optimistic().hours()),
                        format_shortest(v.effective.most_likely().hours()),
                        format_shortest(v.effective.pessimistic().hours()),
                        format_fixed(v.points_per_unit, 4),
                        format_grouped(v.unit_price, 2),
                        std::to_string(v.effective_amount),
                        format_shortest(v.line.deflation),
                        format_grouped(v.total_value, 2),
                        format_grouped(v.deflated_value, 2),
                        format_grouped(v.total_points, 2)});
    }
    rows.push_back({"TOTAL", "", "", "", "", "", "", "", "", "", "",
                    format_grouped(totals.value, 2), format_grouped(totals.deflated, 2),
                    format_grouped(totals.points, 2)});

    std::string out;
    if (options.stamp) out += "generated_at: " + utc_stamp() + "\n";
    out += "Counting report (currency " + options.currency_label + ")\n";
    out += render_table(columns, rows);
    bool any_corrected = false;
    for (const ValuedLine& v : lines) any_corrected |= v.effective.corrected();
    if (any_corrected)
        out += "* estimate corrected to the minimum optimistic-pessimistic spread\n";
    return out;
}

std::string count_csv(std::span<const ValuedLine> lines, const ReportTotals& totals,
                      const ReportOptions& options) {
    std::string out;
    if (options.stamp) out += "# generated_at: " + utc_stamp() + "\n";
    out +=
        "id,description,effort_factor,inertia,adjustment,optimistic_h,"
        "most_likely_h,pessimistic_h,corrected,points_per_unit,point_value,"
        "amount,deflation,total_value,deflated_value,total_points\n";
    for (const ValuedLine& v : lines) {
        out += csv_escape(v.line.id);
        out += ',';
        out += csv_escape(v.line.description);
        out += ',';
        out += format_shortest(v.line.ctx.effort_factor);
        out += ',';
        out += format_shortest(v.line.ctx.inertia);
        out += ',';
        out += format_shortest(v.line.ctx.adjustment);
        out += ',';
        out += format_shortest(v.effective.optimistic().hours());
        out += ',';
        out += format_shortest(v.effective.most_likely().hours());
        out += ',';
        out += format_shortest(v.effective.pessimistic().hours());
        out += ',';
        out += v.effective.corrected() ? "1" : "0";
        out += ',';
        out += format_fixed(v.points_per_unit, 4);
        out += ',';
        out += format_fixed(v.unit_price, 2);
        out += ',';
        out += std::to_string(v.effective_amount);
        out += ',';
        out += format_shortest(v.line.deflation);
        out += ',';
        out += format_fixed(v.total_value, 2);
        out += ',';
        out += format_fixed(v.deflated_value, 2);
        out += ',';
        out += format_fixed(v.total_points, 2);
        out += '\n';
    }
    out += "TOTAL,,,,,,,,,,,,," + format_fixed(totals.value, 2) + ',' +
           format_fixed(totals.deflated, 2) + ',' + format_fixed(totals.points, 2) +
           '\n';
    return out;
}

std::string count_json(std::span<const ValuedLine> lines, const ReportTotals& totals,
                       const ReportOptions& options) {
    using nlohmann::json;
    json doc;
    doc["currency"] = options.currency_label;
    if (options.stamp) doc["generated_at"] = utc_stamp();
    json out_lines = json::array();
    for (const ValuedLine& v : lines) {
        // Full-precision numbers: summing the parsed lines reproduces the
        // totals object exactly.
        json j;
        j["id"] = v.line.id;
        j["description"] = v.line.description;
        j["effort_factor"] = v.line.ctx.effort_factor;
        j["inertia"] = v.line.ctx.inertia;
        j["adjustment"] = v.line.ctx.adjustment;
        j["optimistic_h"] = v.effective.optimistic().hours();
        j["most_likely_h"] = v.effective.most_likely().hours();
        j["pessimistic_h"] = v.effective.pessimistic().hours();
        j["corrected"] = v.effective.corrected();
        j["price_class"] = v.line.price_class;
        j["unit_price"] = v.unit_price;
        j["amount"] = v.effective_amount;
        j["deflation"] = v.line.deflation;
        j["points_per_unit"] = v.points_per_unit;
        j["total_points"] = v.total_points;
        j["total_value"] = v.total_value;
        j["deflated_value"] = v.deflated_value;
        out_lines.push_back(std::move(j));
    }
    doc["lines"] = std::move(out_lines);
    doc["totals"] = {{"points", totals.points},
                     {"value", totals.value},
                     {"deflated", totals.deflated}};
    return doc.dump(2) + "\n";
}

}  // namespace

std::string render_count_report(std::span<const ValuedLine> lines,
                                const ReportTotals& totals,
                                const ReportOptions& options) {
    switch (options.format) {
        case OutputFormat::table: return count_table(lines, totals, options);
        case OutputFormat::csv: return count_csv(lines, totals, options);
        case OutputFormat::json: return count_json(lines, totals, options);
    }
    return {};
}

std::string render_gauge_report(const GaugeReport& report,
                                const ReportOptions& options) {
    const char* direction =
        report.direction == GaugeDirection::add ? "add" : "subtract";
    switch (options.format) {
        case OutputFormat::table: {
            std::string out;
            if (options.stamp) out += "generated_at: " + utc_stamp() + "\n";
            out += "Line:           " + report.line_id + "- " + report.description + "\n";
            out += "Points/unity:   " + format_fixed(report.points, 4) + "\n";
            out += "dN/dMP:         " + format_fixed(report.marginal, 4) + " points/h\n";
            out += "Gauge:          " + std::string(direction) + " " +
                   format_shortest(report.hours) + " h\n";
            out += "Gauged points:  " + format_fixed(report.gauged_points, 4) + "\n";
            out += "Point value:    " + format_grouped(report.unit_price, 2) + "\n";
            out += "Gauged value:   " + options.currency_label + " " +
                   format_grouped(report.gauged_value, 2) + "\n";
            return out;
        }
        case OutputFormat::csv: {
            std::string out;
            if (options.stamp) out += "# generated_at: " + utc_stamp() + "\n";
            out += "id,points_per_unit,marginal_points_per_hour,hours,direction,"
                   "gauged_points,point_value,gauged_value\n";
            out += csv_escape(report.line_id) + ',' + format_fixed(report.points, 4) +
                   ',' + format_fixed(report.marginal, 4) + ',' +
                   format_shortest(report.hours) + ',' + direction + ',' +
                   format_fixed(report.gauged_points, 4) + ',' +
                   format_fixed(report.unit_price, 2) + ',' +
                   format_fixed(report.gauged_value, 2) + '\n';
            return out;
        }
        case OutputFormat::json: {
            nlohmann::json doc;
            if (options.stamp) doc["generated_at"] = utc_stamp();
            doc["id"] = report.line_id;
            doc["description"] = report.description;
            doc["points_per_unit"] = report.points;
            doc["marginal_points_per_hour"] = report.marginal;
            doc["hours"] = report.hours;
            doc["direction"] = direction;
            doc["gauged_points"] = report.gauged_points;
            doc["unit_price"] = report.unit_price;
            doc["gauged_value"] = report.gauged_value;
            doc["currency"] = options.currency_label;
            return doc.dump(2) + "\n";
        }
    }
    return {};
}

}  // namespace fpc
