#pragma once

// The explicit immersion families: the three flat products in C^2, the
// one-parameter-family flat torus lifts into S^5 over CP^2, six families
// of flat lifts into H^5_1 over CH^2, and a deliberately non-stationary
// Lagrangian graph used as a rejection control.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hsl/immersion.hpp"

namespace hsl {

struct ExpectedProperties {
  bool lagrangian = true;
  bool hamiltonian_stationary = true;
  bool parallel_H = false;
  bool parallel_A = false;
  bool flat = false;
  bool minimal = false;
  std::optional<double> constant_absH;  // closed form, when known
};

struct ParamSpec {
  std::string name;
  std::string constraint;  // human-readable clause, quoted in errors and `list`
};

struct EntrySchema {
  std::string id;
  std::string ambient;
  std::vector<ParamSpec> params;
  bool control = false;
};

struct CatalogEntry {
  std::string id;
  AmbientSpace ambient;
  std::vector<std::pair<std::string, double>> params;  // declared order
  ImmersionMap map;
  ExpectedProperties expected;
  bool control = false;
};

// Stable, documented ordering: C^2 entries, cp2-flat, ch2-family1..6,
// then the control surface.
std::vector<EntrySchema> list_catalog();

// Builds by id with full parameter validation; BadParameter names the
// violated clause, unknown ids raise Unsupported.
CatalogEntry build_entry(const std::string& id, const std::map<std::string, double>& params);

CatalogEntry build_c2_plane();
CatalogEntry build_c2_cylinder(double r);
CatalogEntry build_c2_torus(double r1, double r2);
CatalogEntry build_cp2_flat(double a, double b);
CatalogEntry build_ch2_family(int k, double a, double b);
// Lagrangian graph of the potential u = 0.3 x^3 y: exactly Lagrangian,
// not Hamiltonian stationary. Rejection control for the check suite.
CatalogEntry build_control_graph();

}  // namespace hsl
