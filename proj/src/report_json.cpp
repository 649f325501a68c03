#include "hsl/report_json.hpp"

#include <cmath>

namespace hsl {

nlohmann::ordered_json report_to_json(const CheckReport& report) {
  nlohmann::ordered_json j;
  j["entry"] = report.entry;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : report.params) params[k] = v;
  j["params"] = params;
  j["grid"] = {report.nx, report.ny};
  j["profile"] = report.profile;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["sup_residual"] = c.sup_residual;
    e["tolerance"] = c.tolerance;
    e["pass"] = c.pass;
    if (std::isnan(c.argmax_point[0]))
      e["argmax_point"] = nullptr;
    else
      e["argmax_point"] = {c.argmax_point[0], c.argmax_point[1]};
    checks.push_back(e);
  }
  j["checks"] = checks;
  j["overall_pass"] = report.overall_pass;
  if (report.wall_ms)
    j["wall_ms"] = *report.wall_ms;
  else
    j["wall_ms"] = nullptr;
  if (report.seed)
    j["seed"] = *report.seed;
  else
    j["seed"] = nullptr;
  return j;
}

std::string report_to_string(const CheckReport& report) {
  return report_to_json(report).dump(2) + "\n";
}

}  // namespace hsl
