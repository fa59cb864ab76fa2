#include "fpc/catalog.hpp"

#include <set>

#include "fpc/csv.hpp"
#include "fpc/numfmt.hpp"

namespace fpc {

ComplexityLevel parse_complexity(std::string_view text) {
    const std::string key = to_lower(trim(text));
    if (key == "low") return ComplexityLevel::low;
    if (key == "average") return ComplexityLevel::average;
    if (key == "high") return ComplexityLevel::high;
    if (key == "standard") return ComplexityLevel::standard;
    throw ParseError("unknown complexity '" + std::string(text) +
                     "' (expected low, average, high or standard)");
}

std::string_view to_string(ComplexityLevel level) {
    switch (level) {
        case ComplexityLevel::low: return "low";
        case ComplexityLevel::average: return "average";
        case ComplexityLevel::high: return "high";
        case ComplexityLevel::standard: return "standard";
    }
    return "standard";
}

namespace {

const char* kCatalogHeader[] = {"task", "complexity", "optimistic",
                                "pessimistic", "most_likely"};

bool header_matches(const std::vector<std::string>& fields) {
    if (fields.size() != 5) return false;
    for (std::size_t i = 0; i < 5; ++i)
        if (to_lower(trim(fields[i])) != kCatalogHeader[i]) return false;
    return true;
}

}  // namespace

TaskCatalog TaskCatalog::load_collecting(std::string_view csv_text,
                                         std::vector<LoadIssue>& issues) {
    TaskCatalog catalog;
    std::vector<CsvRow> rows;
    try {
        rows = parse_csv(csv_text);
    } catch (const ParseError& e) {
        issues.push_back({0, IssueKind::parse, e.what()});
        return catalog;
    }
    if (rows.empty()) {
        issues.push_back({0, IssueKind::parse,
                          "catalog is empty; expected header "
                          "task,complexity,optimistic,pessimistic,most_likely"});
        return catalog;
    }
    if (!header_matches(rows.front().fields)) {
        issues.push_back({rows.front().line_no, IssueKind::parse,
                          "bad catalog header; expected "
                          "task,complexity,optimistic,pessimistic,most_likely"});
        return catalog;
    }

    std::set<std::pair<std::string, ComplexityLevel>> seen;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const CsvRow& row = rows[r];
        if (row.fields.size() != 5) {
            issues.push_back({row.line_no, IssueKind::parse,
                              "expected 5 fields, got " +
                                  std::to_string(row.fields.size())});
            continue;
        }
        TaskCatalogEntry entry;
        entry.task_name = std::string(trim(row.fields[0]));
        if (entry.task_name.empty()) {
            issues.push_back({row.line_no, IssueKind::validation, "empty task name"});
            continue;
        }
        try {
            entry.complexity = parse_complexity(row.fields[1]);
            entry.optimistic = Duration::parse(row.fields[2]);
            entry.pessimistic = Duration::parse(row.fields[3]);
            entry.most_likely = Duration::parse(row.fields[4]);
        } catch (const ParseError& e) {
            issues.push_back({row.line_no, IssueKind::parse, e.what()});
            continue;
        }
        if (!(entry.optimistic <= entry.most_likely &&
              entry.most_likely <= entry.pessimistic)) {
            issues.push_back(
                {row.line_no, IssueKind::validation,
                 "task '" + entry.task_name +
                     "': estimates must satisfy optimistic <= most_likely <= pessimistic"});
            continue;
        }
        auto key = std::make_pair(normalize_key(entry.task_name), entry.complexity);
        if (!seen.insert(key).second) {
            issues.push_back({row.line_no, IssueKind::validation,
                              "duplicate entry for task '" + entry.task_name +
                                  "' at complexity '" +
                                  std::string(to_string(entry.complexity)) + "'"});
            continue;
        }
        catalog.entries_.push_back(std::move(entry));
    }
    return catalog;
}

TaskCatalog TaskCatalog::load(std::string_view csv_text) {
    std::vector<LoadIssue> issues;
    TaskCatalog catalog = load_collecting(csv_text, issues);
    throw_if_issues(issues);
    return catalog;
}

const TaskCatalogEntry* TaskCatalog::find(std::string_view task_name,
                                          ComplexityLevel level) const {
    const std::string key = normalize_key(task_name);
    for (const auto& entry : entries_)
        if (entry.complexity == level && normalize_key(entry.task_name) == key)
            return &entry;
    return nullptr;
}

}  // namespace fpc
