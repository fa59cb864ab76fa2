#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fpc/duration.hpp"
#include "fpc/errors.hpp"

namespace fpc {

// Task complexity is an enumerated input. "standard" is a distinct level,
// not an alias of "average": single-variant tasks are priced independently.
enum class ComplexityLevel { low, average, high, standard };

ComplexityLevel parse_complexity(std::string_view text);  // throws ParseError
std::string_view to_string(ComplexityLevel level);

struct TaskCatalogEntry {
    std::string task_name;
    ComplexityLevel complexity = ComplexityLevel::standard;
    Duration optimistic;
    Duration pessimistic;
    Duration most_likely;
};

// The reference list of tasks with their three-point duration estimates.
// Immutable once loaded; safe to share across threads.
class TaskCatalog {
  public:
    // Expected header: task,complexity,optimistic,pessimistic,most_likely
    // Collects every row problem instead of stopping at the first one.
    // Rows that fail validation are excluded from the result.
    static TaskCatalog load_collecting(std::string_view csv_text,
                                       std::vector<LoadIssue>& issues);

    // Throwing variant; the message aggregates all collected issues.
    static TaskCatalog load(std::string_view csv_text);

    const std::vector<TaskCatalogEntry>& entries() const { return entries_; }

    const TaskCatalogEntry* find(std::string_view task_name,
                                 ComplexityLevel level) const;
    bool contains(std::string_view task_name, ComplexityLevel level) const {
        return find(task_name, level) != nullptr;
    }

  private:
    std::vector<TaskCatalogEntry> entries_;
};

}  // namespace fpc
