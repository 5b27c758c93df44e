#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "b4/report.hpp"

namespace b4 {

/// Suite names accepted by run_suite, "all" last.
const std::vector<std::string_view>& suite_names();

/// Runs one named verification suite with parameter ranges capped by `max`
/// (ℓ <= max, n <= max). Throws Error for unknown names.
Report run_suite(std::string_view name, std::size_t max);

}  // namespace b4
