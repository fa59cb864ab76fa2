#pragma once

#include <string_view>
#include <vector>

#include "fpc/valuation.hpp"

namespace fpc {

// Sheet CSV header, in order:
//   id,description,C,i,K,O,MP,P,amount,price_class,deflation,flags
// Durations accept H:MM:SS or decimal hours; a comma decimal separator in
// numeric fields is normalized on ingest. The flags field holds
// ';'-separated tokens: min_spread | volume=<n> | task=<name>:<complexity>.
struct SheetLoadResult {
    std::vector<CountLine> lines;  // rows that loaded cleanly
    std::vector<LoadIssue> issues;
    bool ok() const { return issues.empty(); }
};

SheetLoadResult load_count_sheet_collecting(std::string_view csv_text);

// Throwing variant; the message lists every collected issue with its row.
std::vector<CountLine> load_count_sheet(std::string_view csv_text);

// Referential checks used by count and validate: price classes must resolve
// and task= annotations must name catalog entries. `catalog` may be null to
// skip task checks.
std::vector<LoadIssue> check_sheet_references(std::span<const CountLine> lines,
                                              const PriceSchedule& prices,
                                              const TaskCatalog* catalog);

}  // namespace fpc
