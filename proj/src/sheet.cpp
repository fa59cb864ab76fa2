#include "fpc/sheet.hpp"

#include <cmath>
#include <set>

#include "fpc/csv.hpp"
#include "fpc/numfmt.hpp"

namespace fpc {

namespace {

const char* kSheetHeader[] = {"id",     "description", "c",      "i",
                              "k",      "o",           "mp",     "p",
                              "amount", "price_class", "deflation", "flags"};
constexpr std::size_t kSheetColumns = 12;

bool header_matches(const std::vector<std::string>& fields) {
    if (fields.size() != kSheetColumns) return false;
    for (std::size_t i = 0; i < kSheetColumns; ++i)
        if (to_lower(trim(fields[i])) != kSheetHeader[i]) return false;
    return true;
}

double parse_sheet_number(const std::string& field) {
    return parse_decimal(normalize_decimal_comma(field));
}

long long parse_sheet_integer(const std::string& field, const char* what) {
    const std::string_view s = trim(field);
    if (s.empty()) throw ParseError(std::string("empty ") + what);
    for (char c : s)
        if (c < '0' || c > '9')
            throw ParseError(std::string(what) + " '" + std::string(s) +
                             "' must be a non-negative whole number");
    long long value = 0;
    for (char c : s) {
        value = value * 10 + (c - '0');
        if (value > 1000000000000LL)
            throw ParseError(std::string(what) + " '" + std::string(s) + "' is too large");
    }
    return value;
}

LineFlags parse_flags(const std::string& field) {
    LineFlags flags;
    std::string_view rest = field;
    while (!rest.empty()) {
        const std::size_t semi = rest.find(';');
        std::string_view token = trim(rest.substr(0, semi));
        rest = semi == std::string_view::npos ? std::string_view{}
                                              : rest.substr(semi + 1);
        if (token.empty()) continue;
        if (to_lower(token) == "min_spread") {
            flags.min_spread = true;
        } else if (token.starts_with("volume=")) {
            const long long n =
                parse_sheet_integer(std::string(token.substr(7)), "volume count");
            if (n < 1) throw ValidationError("volume count must be at least 1");
            flags.volume = n;
        } else if (token.starts_with("task=")) {
            const std::string_view ref = token.substr(5);
            const std::size_t colon = ref.rfind(':');
            if (colon == std::string_view::npos || colon == 0 || colon + 1 == ref.size())
                throw ParseError("task reference '" + std::string(ref) +
                                 "' must look like task=<name>:<complexity>");
            flags.task_ref = {std::string(trim(ref.substr(0, colon))),
                              parse_complexity(ref.substr(colon + 1))};
        } else {
            throw ParseError("unknown flag '" + std::string(token) + "'");
        }
    }
    return flags;
}

}  // namespace

SheetLoadResult load_count_sheet_collecting(std::string_view csv_text) {
    SheetLoadResult result;
    std::vector<CsvRow> rows;
    try {
        rows = parse_csv(csv_text);
    } catch (const ParseError& e) {
        result.issues.push_back({0, IssueKind::parse, e.what()});
        return result;
    }
    if (rows.empty()) {
        result.issues.push_back({0, IssueKind::parse,
                                 "sheet is empty; expected header "
                                 "id,description,C,i,K,O,MP,P,amount,price_class,"
                                 "deflation,flags"});
        return result;
    }
    if (!header_matches(rows.front().fields)) {
        result.issues.push_back({rows.front().line_no, IssueKind::parse,
                                 "bad sheet header; expected "
                                 "id,description,C,i,K,O,MP,P,amount,price_class,"
                                 "deflation,flags"});
        return result;
    }

    std::set<std::string> ids;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const CsvRow& row = rows[r];
        if (row.fields.size() != kSheetColumns) {
            result.issues.push_back({row.line_no, IssueKind::parse,
                                     "expected 12 fields, got " +
                                         std::to_string(row.fields.size())});
            continue;
        }
        CountLine line;
        line.source_row = row.line_no;
        line.id = std::string(trim(row.fields[0]));
        line.description = std::string(trim(row.fields[1]));
        if (line.id.empty()) {
            result.issues.push_back({row.line_no, IssueKind::validation, "empty line id"});
            continue;
        }
        if (!ids.insert(line.id).second) {
            result.issues.push_back({row.line_no, IssueKind::validation,
                                     "duplicate line id '" + line.id + "'"});
            continue;
        }

        bool bad = false;
        try {
            line.ctx.effort_factor = parse_sheet_number(row.fields[2]);
            line.ctx.inertia = parse_sheet_number(row.fields[3]);
            line.ctx.adjustment = parse_sheet_number(row.fields[4]);
            const Duration o = Duration::parse(normalize_decimal_comma(row.fields[5]));
            const Duration mp = Duration::parse(normalize_decimal_comma(row.fields[6]));
            const Duration p = Duration::parse(normalize_decimal_comma(row.fields[7]));
            line.est = EstimateTriple::create(o, mp, p);
            line.amount = parse_sheet_integer(row.fields[8], "amount");
            line.price_class = std::string(trim(row.fields[9]));
            line.deflation = parse_sheet_number(row.fields[10]);
            line.flags = parse_flags(row.fields[11]);
        } catch (const ParseError& e) {
            result.issues.push_back({row.line_no, IssueKind::parse, e.what()});
            continue;
        } catch (const ValidationError& e) {
            result.issues.push_back({row.line_no, IssueKind::validation, e.what()});
            continue;
        }

        try {
            line.ctx.validate();
            if (line.amount < 1)
                throw ValidationError("amount must be at least 1");
            if (line.price_class.empty())
                throw ValidationError("empty price class");
            if (!std::isfinite(line.deflation) || line.deflation < 1.0)
                throw ValidationError("deflation must be >= 1, got " +
                                      format_shortest(line.deflation));
        } catch (const ValidationError& e) {
            result.issues.push_back({row.line_no, IssueKind::validation, e.what()});
            bad = true;
        }
        if (!bad) result.lines.push_back(std::move(line));
    }
    return result;
}

std::vector<CountLine> load_count_sheet(std::string_view csv_text) {
    SheetLoadResult result = load_count_sheet_collecting(csv_text);
    throw_if_issues(result.issues);
    return std::move(result.lines);
}

std::vector<LoadIssue> check_sheet_references(std::span<const CountLine> lines,
                                              const PriceSchedule& prices,
                                              const TaskCatalog* catalog) {
    std::vector<LoadIssue> issues;
    for (const CountLine& line : lines) {
        try {
            prices.unit_value(line.price_class);
        } catch (const LookupError& e) {
            issues.push_back({line.source_row, IssueKind::validation,
                              "line '" + line.id + "': " + e.what()});
        }
        if (catalog && line.flags.task_ref) {
            const auto& [task, level] = *line.flags.task_ref;
            if (!catalog->contains(task, level))
                issues.push_back({line.source_row, IssueKind::validation,
                                  "line '" + line.id + "': task '" + task +
                                      "' at complexity '" +
                                      std::string(to_string(level)) +
                                      "' is not in the catalog"});
        }
    }
    return issues;
}

}  // namespace fpc
