#include <clocale>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fpc/builtin_data.hpp"
#include "fpc/catalog.hpp"
#include "fpc/factors.hpp"
#include "fpc/numfmt.hpp"
#include "fpc/report.hpp"
#include "fpc/sheet.hpp"
#include "fpc/sweep.hpp"
#include "fpc/valuation.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitParseOrIo = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw fpc::IoError("cannot read '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw fpc::IoError("cannot write '" + out_path + "'");
    out << content;
}

struct CommonOptions {
    std::string catalog_path;
    std::string factors_path;
    std::string sheet_path;
    std::string format = "table";
    std::string out_path;
    double min_spread_ratio = 0.20;
    bool stamp = false;
};

void add_common_flags(CLI::App* cmd, CommonOptions& opts, bool with_sheet) {
    cmd->add_option("--catalog", opts.catalog_path,
                    "Task catalog CSV (default: built-in tables)");
    cmd->add_option("--factors", opts.factors_path,
                    "Factor/price config JSON (default: built-in tables)");
    if (with_sheet)
        cmd->add_option("--sheet", opts.sheet_path, "Counting sheet CSV");
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    cmd->add_option("--out", opts.out_path, "Write output to this file");
    cmd->add_option("--min-spread-ratio", opts.min_spread_ratio,
                    "Minimum pessimistic/optimistic spread for flagged lines")
        ->check(CLI::NonNegativeNumber);
    cmd->add_flag("--stamp", opts.stamp, "Embed a generation timestamp");
}

fpc::OutputFormat to_format(const std::string& name) {
    if (name == "csv") return fpc::OutputFormat::csv;
    if (name == "json") return fpc::OutputFormat::json;
    return fpc::OutputFormat::table;
}

std::string load_text_or_builtin(const std::string& path, std::string_view builtin) {
    if (path.empty()) return std::string(builtin);
    return read_file(path);
}

fpc::FactorTables load_factors(const CommonOptions& opts) {
    return fpc::load_factor_tables(
        load_text_or_builtin(opts.factors_path, fpc::builtin_factors_json()));
}

fpc::TaskCatalog load_catalog(const CommonOptions& opts) {
    return fpc::TaskCatalog::load(
        load_text_or_builtin(opts.catalog_path, fpc::builtin_task_catalog_csv()));
}

void print_issues(const std::vector<fpc::LoadIssue>& issues, const std::string& source) {
    for (const auto& issue : issues)
        std::cerr << source << ": " << issue.to_string() << "\n";
}

int run_count(const CommonOptions& opts) {
    if (opts.sheet_path.empty()) {
        std::cerr << "count: --sheet is required\n";
        return kExitParseOrIo;
    }
    const fpc::FactorTables tables = load_factors(opts);
    const fpc::TaskCatalog catalog = load_catalog(opts);

    const auto loaded = fpc::load_count_sheet_collecting(read_file(opts.sheet_path));
    if (!loaded.ok()) {
        print_issues(loaded.issues, opts.sheet_path);
        return fpc::any_parse_issue(loaded.issues) ? kExitParseOrIo : kExitValidation;
    }
    if (loaded.lines.empty()) {
        std::cerr << opts.sheet_path << ": no counting lines\n";
        return kExitValidation;
    }
    const auto ref_issues =
        fpc::check_sheet_references(loaded.lines, tables.prices, &catalog);
    if (!ref_issues.empty()) {
        print_issues(ref_issues, opts.sheet_path);
        return kExitValidation;
    }

    const auto valued =
        fpc::value_sheet(loaded.lines, tables.prices, opts.min_spread_ratio);
    for (const auto& line : valued)
        if (line.zero_spread_warning)
            std::cerr << "warning: line '" << line.line.id
                      << "': zero estimates; the minimum-spread correction "
                         "degenerates to an all-zero triple\n";
    const fpc::ReportTotals totals = fpc::total_report(valued);

    fpc::ReportOptions report_options{to_format(opts.format), opts.stamp,
                                      tables.prices.currency_label()};
    write_output(opts.out_path,
                 fpc::render_count_report(valued, totals, report_options));
    return kExitOk;
}

int run_gauge(const CommonOptions& opts, const std::string& line_id,
              const std::string& hours_text, const std::string& direction_name) {
    if (opts.sheet_path.empty()) {
        std::cerr << "gauge: --sheet is required\n";
        return kExitParseOrIo;
    }
    const fpc::FactorTables tables = load_factors(opts);
    const auto lines = fpc::load_count_sheet(read_file(opts.sheet_path));

    const fpc::CountLine* target = nullptr;
    for (const auto& line : lines)
        if (line.id == line_id) target = &line;
    if (!target) throw fpc::LookupError("unknown line id '" + line_id + "'");

    const double hours = fpc::Duration::parse(hours_text).hours();
    const auto direction = direction_name == "subtract"
                               ? fpc::GaugeDirection::subtract
                               : fpc::GaugeDirection::add;

    const fpc::ValuedLine valued =
        fpc::value_line(*target, tables.prices, opts.min_spread_ratio);
    const double gauged =
        fpc::gauge_points(target->ctx, valued.effective, hours, direction);

    fpc::GaugeReport report;
    report.line_id = target->id;
    report.description = target->description;
    report.points = valued.points_per_unit;
    report.marginal = fpc::marginal_points(target->ctx, valued.effective);
    report.hours = hours;
    report.direction = direction;
    report.gauged_points = gauged;
    report.unit_price = valued.unit_price;
    report.gauged_value = fpc::value_points(gauged, valued.unit_price);

    fpc::ReportOptions report_options{to_format(opts.format), opts.stamp,
                                      tables.prices.currency_label()};
    write_output(opts.out_path, fpc::render_gauge_report(report, report_options));
    return kExitOk;
}

struct CurveOptions {
    std::string sweep = "inertia";
    std::vector<double> k_values;
    double effort_factor = 5.8;
    double fixed_inertia = 1.0;
    std::string estimate;  // "O,MP,P"
    std::string i_grid;    // "lo:hi:n"
    std::string mp_grid;
};

std::vector<double> parse_grid(const std::string& text) {
    const auto first = text.find(':');
    const auto second = text.find(':', first + 1);
    if (first == std::string::npos || second == std::string::npos ||
        text.find(':', second + 1) != std::string::npos)
        throw fpc::ParseError("grid '" + text + "' must look like lo:hi:n");
    const double lo = fpc::parse_decimal(text.substr(0, first));
    const double hi = fpc::parse_decimal(text.substr(first + 1, second - first - 1));
    const long long n = std::stoll(text.substr(second + 1));
    if (n < 1 || n > 10000000)
        throw fpc::ParseError("grid '" + text + "': point count out of range");
    if (n == 1 && lo != hi)
        throw fpc::ParseError("grid '" + text + "': a single point needs lo == hi");
    return fpc::linspace(lo, hi, static_cast<std::size_t>(n));
}

int run_curves(const CommonOptions& opts, const CurveOptions& curve_opts) {
    fpc::CurveSpec spec = curve_opts.sweep == "both" ? fpc::default_surface_sweep()
                                                     : fpc::default_inertia_sweep();
    if (curve_opts.sweep == "most-likely") {
        spec.variable = fpc::SweepVariable::most_likely;
        spec.most_likely_grid = fpc::linspace(1.0, 20.0, 20);
        spec.optimistic_h = 1.0;
        spec.pessimistic_h = 20.0;
    }
    spec.effort_factor = curve_opts.effort_factor;
    spec.fixed_inertia = curve_opts.fixed_inertia;
    if (!curve_opts.k_values.empty()) spec.k_values = curve_opts.k_values;
    if (!curve_opts.estimate.empty()) {
        const auto fields = fpc::split_csv_line(curve_opts.estimate);
        if (fields.size() != 3)
            throw fpc::ParseError("--estimate expects O,MP,P");
        spec.optimistic_h = fpc::Duration::parse(fields[0]).hours();
        spec.fixed_most_likely = fpc::Duration::parse(fields[1]).hours();
        spec.pessimistic_h = fpc::Duration::parse(fields[2]).hours();
    }
    if (!curve_opts.i_grid.empty()) spec.inertia_grid = parse_grid(curve_opts.i_grid);
    if (!curve_opts.mp_grid.empty())
        spec.most_likely_grid = parse_grid(curve_opts.mp_grid);

    const auto rows = fpc::sweep(spec);
    write_output(opts.out_path, fpc::render_sweep(spec, rows));
    return kExitOk;
}

int run_validate(const CommonOptions& opts) {
    std::size_t issue_count = 0;
    bool io_failure = false;

    const auto report = [&](const std::string& source,
                            const std::vector<fpc::LoadIssue>& issues) {
        issue_count += issues.size();
        print_issues(issues, source);
    };

    std::vector<fpc::LoadIssue> catalog_issues;
    fpc::TaskCatalog catalog;
    std::string catalog_source = opts.catalog_path.empty() ? "catalog(built-in)"
                                                           : opts.catalog_path;
    try {
        catalog = fpc::TaskCatalog::load_collecting(
            load_text_or_builtin(opts.catalog_path, fpc::builtin_task_catalog_csv()),
            catalog_issues);
    } catch (const fpc::IoError& e) {
        std::cerr << e.what() << "\n";
        io_failure = true;
    }
    report(catalog_source, catalog_issues);

    std::vector<fpc::LoadIssue> factor_issues;
    fpc::FactorTables tables;
    std::string factors_source = opts.factors_path.empty() ? "factors(built-in)"
                                                           : opts.factors_path;
    try {
        tables = fpc::load_factor_tables_collecting(
            load_text_or_builtin(opts.factors_path, fpc::builtin_factors_json()),
            factor_issues);
    } catch (const fpc::IoError& e) {
        std::cerr << e.what() << "\n";
        io_failure = true;
    }
    report(factors_source, factor_issues);

    if (!opts.sheet_path.empty()) {
        try {
            const auto loaded =
                fpc::load_count_sheet_collecting(read_file(opts.sheet_path));
            report(opts.sheet_path, loaded.issues);
            if (loaded.lines.empty() && loaded.issues.empty())
                report(opts.sheet_path,
                       {{0, fpc::IssueKind::validation, "no counting lines"}});
            report(opts.sheet_path, fpc::check_sheet_references(
                                        loaded.lines, tables.prices, &catalog));
        } catch (const fpc::IoError& e) {
            std::cerr << e.what() << "\n";
            io_failure = true;
        }
    }

    if (io_failure) return kExitParseOrIo;
    if (issue_count == 0) {
        std::cout << "validation: clean\n";
        return kExitOk;
    }
    std::cout << "validation: " << issue_count << " issue(s)\n";
    return kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
    std::setlocale(LC_NUMERIC, "C");

    CLI::App app{"Extended function point counting for effort-estimated tasks"};
    app.require_subcommand(1);

    CommonOptions count_opts;
    CLI::App* count_cmd =
        app.add_subcommand("count", "Value a counting sheet and print the report");
    add_common_flags(count_cmd, count_opts, true);

    CommonOptions gauge_opts;
    std::string gauge_line, gauge_hours, gauge_direction;
    CLI::App* gauge_cmd = app.add_subcommand(
        "gauge", "Adjust one line's count by worked hours after completion");
    add_common_flags(gauge_cmd, gauge_opts, true);
    gauge_cmd->add_option("--line", gauge_line, "Sheet line id")->required();
    gauge_cmd->add_option("--hours", gauge_hours,
                          "Hours to add or subtract (decimal or H:MM:SS)")
        ->required();
    gauge_cmd->add_option("--direction", gauge_direction, "add or subtract")
        ->required()
        ->check(CLI::IsMember({"add", "subtract"}));

    CommonOptions curves_common;
    CurveOptions curve_opts;
    CLI::App* curves_cmd =
        app.add_subcommand("curves", "Emit N and V sweep data for plotting");
    add_common_flags(curves_cmd, curves_common, false);
    curves_cmd->add_option("--sweep", curve_opts.sweep, "Swept variable")
        ->check(CLI::IsMember({"inertia", "most-likely", "both"}));
    curves_cmd->add_option("--k", curve_opts.k_values,
                           "K values (comma separated)")
        ->delimiter(',');
    curves_cmd->add_option("--c-factor", curve_opts.effort_factor,
                           "Effort conversion factor C");
    curves_cmd->add_option("--fixed-i", curve_opts.fixed_inertia,
                           "Inertia used when sweeping most-likely");
    curves_cmd->add_option("--estimate", curve_opts.estimate,
                           "Fixed estimate triple O,MP,P");
    curves_cmd->add_option("--i-grid", curve_opts.i_grid, "Inertia grid lo:hi:n");
    curves_cmd->add_option("--mp-grid", curve_opts.mp_grid,
                           "Most-likely grid lo:hi:n");

    CommonOptions validate_opts;
    CLI::App* validate_cmd = app.add_subcommand(
        "validate", "Check catalog, factor and sheet invariants");
    add_common_flags(validate_cmd, validate_opts, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParseOrIo;
    }

    try {
        if (count_cmd->parsed()) return run_count(count_opts);
        if (gauge_cmd->parsed())
            return run_gauge(gauge_opts, gauge_line, gauge_hours, gauge_direction);
        if (curves_cmd->parsed()) return run_curves(curves_common, curve_opts);
        if (validate_cmd->parsed()) return run_validate(validate_opts);
    } catch (const fpc::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParseOrIo;
    } catch (const fpc::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParseOrIo;
    } catch (const fpc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitOk;
}
