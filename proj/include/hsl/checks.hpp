#pragma once

// The predicate suite: pointwise geometry turned into named pass/fail
// checks with sup-residuals over a sample grid. Checks report sup-norms,
// never integrals; the Wintgen check is one-sided and reports a signed
// worst slack.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hsl/catalog.hpp"
#include "hsl/surface_geometry.hpp"

namespace hsl {

struct ToleranceProfile {
  std::string name;
  double algebraic_tol;   // jet-exact pointwise identities
  double fd_tol;          // grid finite-difference quantities
  double constraint_tol;  // lift constraint residuals

  static ToleranceProfile strict();
  static ToleranceProfile defaults();
  static ToleranceProfile sweep();
  static ToleranceProfile by_name(const std::string& name);
};

struct CheckResult {
  std::string name;
  double sup_residual = 0.0;  // signed for the one-sided wintgen check
  double tolerance = 0.0;
  bool pass = false;
  std::array<double, 2> argmax_point{};
};

struct CheckReport {
  std::string entry;
  std::vector<std::pair<std::string, double>> params;
  int nx = 0, ny = 0;
  std::string profile;
  std::vector<CheckResult> checks;
  bool overall_pass = false;
  std::optional<double> wall_ms;        // unset by default: reports stay byte-stable
  std::optional<std::uint64_t> seed;
};

// Runs the full suite on an nx x ny sample grid (>= 9 per axis; the FD
// checks need a margin-2 interior). DegenerateImmersion aborts with the
// failing sample location.
CheckReport run_checks(const CatalogEntry& entry, int nx, int ny,
                       const ToleranceProfile& profile);
CheckReport run_checks(const ImmersionMap& map, const ExpectedProperties& expected,
                       const std::string& label,
                       const std::vector<std::pair<std::string, double>>& params, int nx,
                       int ny, const ToleranceProfile& profile);

// |integral of K dA| over one fundamental domain, by composite
// Gauss-Legendre quadrature. Requires exact periodicity on both axes.
double gauss_bonnet_flat(const CatalogEntry& entry, int cells_per_axis = 12,
                         int gl_order = 5);

// f(r)^p Vol(r) / (r^2 log r) per sample; a pure formula evaluator.
std::vector<double> growth_ratio(const std::vector<double>& f_values,
                                 const std::vector<double>& vol_values, double p,
                                 const std::vector<double>& r_list);

// Convergence probe for the FD Laplace-Beltrami operator behind the
// Bochner check: applies it to sin(x)cos(y) over the entry's induced
// metric and returns the sup error against the analytic Laplacian.
double bochner_fd_probe_error(const CatalogEntry& entry, int nx, int ny);

// Least-squares slope of log(err) against log(h).
double loglog_slope(const std::vector<double>& hs, const std::vector<double>& errs);

}  // namespace hsl
