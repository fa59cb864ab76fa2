#pragma once

#include <string_view>

namespace fpc {

// Compiled-in default tables, used by the CLI when no --catalog/--factors
// path is given. The files under data/ ship the same content.
std::string_view builtin_task_catalog_csv();
std::string_view builtin_factors_json();

}  // namespace fpc
