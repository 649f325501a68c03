#pragma once

#include <nlohmann/json.hpp>

#include "hsl/checks.hpp"

namespace hsl {

// Fixed top-level schema: {entry, params, grid, profile, checks,
// overall_pass, wall_ms, seed}. Key order is fixed and floats use the
// shortest round-trip form, so identical runs serialize byte-identically.
nlohmann::ordered_json report_to_json(const CheckReport& report);
std::string report_to_string(const CheckReport& report);

}  // namespace hsl
