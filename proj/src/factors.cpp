#include "fpc/factors.hpp"

#include <cmath>

#include <json.hpp>

#include "fpc/numfmt.hpp"

namespace fpc {

namespace {

double lookup(const std::map<std::string, double>& table, std::string_view name,
              const char* what) {
    const auto it = table.find(normalize_key(name));
    if (it == table.end())
        throw LookupError("unknown " + std::string(what) + " '" + std::string(name) + "'");
    return it->second;
}

}  // namespace

EffortFactorTable::EffortFactorTable(std::map<std::string, double> steps,
                                     std::map<std::string, double> languages)
    : steps_(std::move(steps)), languages_(std::move(languages)) {}

double EffortFactorTable::step(std::string_view name) const {
    if (normalize_key(name) == "construction")
        throw LookupError(
            "the construction step resolves through a language factor; "
            "look up the construction language instead");
    return lookup(steps_, name, "project step");
}

double EffortFactorTable::language(std::string_view name) const {
    return lookup(languages_, name, "construction language");
}

InertiaTable::InertiaTable(std::map<std::string, double> tools)
    : tools_(std::move(tools)) {}

double InertiaTable::tool(std::string_view name) const {
    return lookup(tools_, name, "tool class");
}

PriceSchedule::PriceSchedule(std::map<std::string, double> classes,
                             std::string currency_label)
    : classes_(std::move(classes)), currency_label_(std::move(currency_label)) {}

double PriceSchedule::unit_value(std::string_view price_class) const {
    return lookup(classes_, price_class, "price class");
}

namespace {

using nlohmann::json;

void load_factor_map(const json& doc, const char* section, bool is_inertia,
                     std::map<std::string, double>& out,
                     std::vector<LoadIssue>& issues) {
    if (!doc.contains(section)) return;
    const json& node = doc.at(section);
    if (!node.is_object()) {
        issues.push_back({0, IssueKind::parse,
                          std::string(section) + " must be an object of name: value"});
        return;
    }
    for (const auto& [name, value] : node.items()) {
        const std::string key = normalize_key(name);
        double v = 0.0;
        if (value.is_number()) {
            v = value.get<double>();
        } else if (is_inertia && value.is_object() &&
                   value.contains("productivity_gain")) {
            // Supplier-style specification: a gain of 0.3 over the hardest
            // reference tool means i = 0.7.
            const json& gain_node = value.at("productivity_gain");
            if (!gain_node.is_number()) {
                issues.push_back({0, IssueKind::parse,
                                  std::string(section) + "." + name +
                                      ": productivity_gain must be a number"});
                continue;
            }
            const double gain = gain_node.get<double>();
            if (!(gain >= 0.0 && gain <= 1.0)) {
                issues.push_back({0, IssueKind::validation,
                                  std::string(section) + "." + name +
                                      ": productivity_gain must lie in [0, 1]"});
                continue;
            }
            v = 1.0 - gain;
        } else {
            issues.push_back({0, IssueKind::parse,
                              std::string(section) + "." + name +
                                  ": expected a number"});
            continue;
        }
        if (!std::isfinite(v)) {
            issues.push_back({0, IssueKind::validation,
                              std::string(section) + "." + name + ": non-finite value"});
            continue;
        }
        if (is_inertia) {
            if (v < 0.0 || v > 1.0) {
                issues.push_back({0, IssueKind::validation,
                                  std::string(section) + "." + name + ": inertia " +
                                      format_shortest(v) + " outside [0, 1]"});
                continue;
            }
        } else if (v <= 0.0) {
            issues.push_back({0, IssueKind::validation,
                              std::string(section) + "." + name + ": factor " +
                                  format_shortest(v) + " must be positive"});
            continue;
        }
        out[key] = v;
    }
}

}  // namespace

FactorTables load_factor_tables_collecting(std::string_view json_text,
                                           std::vector<LoadIssue>& issues) {
    FactorTables tables;
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        issues.push_back({0, IssueKind::parse,
                          std::string("factor config is not valid JSON: ") + e.what()});
        return tables;
    }
    if (!doc.is_object()) {
        issues.push_back({0, IssueKind::parse, "factor config must be a JSON object"});
        return tables;
    }

    std::map<std::string, double> steps, languages, inertia, prices;
    load_factor_map(doc, "step_factors", false, steps, issues);
    load_factor_map(doc, "language_factors", false, languages, issues);
    load_factor_map(doc, "tool_inertia", true, inertia, issues);
    load_factor_map(doc, "price_classes", false, prices, issues);

    if (steps.contains("construction")) {
        issues.push_back({0, IssueKind::validation,
                          "step_factors must not define 'construction'; it resolves "
                          "through language_factors"});
        steps.erase("construction");
    }
    if (const auto it = inertia.find("humanware");
        it != inertia.end() && it->second != 0.0) {
        issues.push_back({0, IssueKind::validation,
                          "tool_inertia.humanware must be exactly 0"});
        inertia.erase("humanware");
    }

    std::string label = "R$";
    if (doc.contains("currency_label")) {
        if (doc.at("currency_label").is_string())
            label = doc.at("currency_label").get<std::string>();
        else
            issues.push_back({0, IssueKind::parse, "currency_label must be a string"});
    }

    tables.effort = EffortFactorTable(std::move(steps), std::move(languages));
    tables.inertia = InertiaTable(std::move(inertia));
    tables.prices = PriceSchedule(std::move(prices), std::move(label));
    return tables;
}

FactorTables load_factor_tables(std::string_view json_text) {
    std::vector<LoadIssue> issues;
    FactorTables tables = load_factor_tables_collecting(json_text, issues);
    throw_if_issues(issues);
    return tables;
}

double productivity(double inertia) {
    if (inertia == 0.0)
        throw DomainError("humanware has no finite tool productivity");
    if (!(inertia > 0.0) || inertia > 1.0)
        throw DomainError("inertia must lie in (0, 1] for a productivity index");
    return 1.0 / inertia;
}

}  // namespace fpc
