#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "fpc/errors.hpp"

namespace fpc {

// Intellectual-effort conversion factors C, keyed by project step. The
// construction step has no step factor of its own: it resolves through the
// construction language instead.
class EffortFactorTable {
  public:
    EffortFactorTable() = default;
    EffortFactorTable(std::map<std::string, double> steps,
                      std::map<std::string, double> languages);

    double step(std::string_view name) const;      // throws LookupError
    double language(std::string_view name) const;  // throws LookupError

    const std::map<std::string, double>& step_factors() const { return steps_; }
    const std::map<std::string, double>& language_factors() const { return languages_; }

  private:
    std::map<std::string, double> steps_;
    std::map<std::string, double> languages_;
};

// Inertia of development i per tool class, each in [0, 1]. Humanware (no
// software tool at all) carries exactly 0.
class InertiaTable {
  public:
    InertiaTable() = default;
    explicit InertiaTable(std::map<std::string, double> tools);

    double tool(std::string_view name) const;  // throws LookupError
    const std::map<std::string, double>& tools() const { return tools_; }

  private:
    std::map<std::string, double> tools_;
};

// Currency value of one function point per price class.
class PriceSchedule {
  public:
    PriceSchedule() = default;
    PriceSchedule(std::map<std::string, double> classes, std::string currency_label);

    double unit_value(std::string_view price_class) const;  // throws LookupError
    const std::map<std::string, double>& price_classes() const { return classes_; }
    const std::string& currency_label() const { return currency_label_; }

  private:
    std::map<std::string, double> classes_;
    std::string currency_label_ = "R$";
};

struct FactorTables {
    EffortFactorTable effort;
    InertiaTable inertia;
    PriceSchedule prices;
};

// Loads the factor tables and price schedule from a JSON config. A tool
// entry may be a plain inertia value or {"productivity_gain": g}, converted
// to i = 1 - g at load time.
FactorTables load_factor_tables_collecting(std::string_view json_text,
                                           std::vector<LoadIssue>& issues);
FactorTables load_factor_tables(std::string_view json_text);  // throwing variant

// Tool productivity p = 1/i. Humanware (i = 0) has no finite value.
double productivity(double inertia);  // throws DomainError

}  // namespace fpc
