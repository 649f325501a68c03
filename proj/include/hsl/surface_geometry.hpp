#pragma once

// Pointwise extrinsic and intrinsic geometry of an immersed Lagrangian
// surface, computed from order-3 jets of the lift. Conventions are
// collected in docs/CONVENTIONS.md; in brief: the mean curvature vector
// is the un-normalized metric trace of the second fundamental form, the
// normal frame is the J-image {i dL_1, i dL_2} of the coordinate tangent
// frame, and all 1-form / codifferential signs follow
//   alpha_j = Re herm(i H, dL_j),   delta alpha = -g^{ij}(d_i alpha_j - Gamma^k_{ij} alpha_k).

#include <array>
#include <vector>

#include "hsl/immersion.hpp"

namespace hsl {

// Induced metric as order->=1 jets of its three components, so first
// and (order permitting) second partials are available analytically.
struct Metric2 {
  RJet g11, g12, g22;

  double det() const;
  bool positive_definite(double tol = kDegenerateGramTol) const;
  // Gamma^k_{ij}, symmetric in (i, j), one jet order lower than g.
  std::array<std::array<std::array<RJet, 2>, 2>, 2> christoffel() const;
};

// Cubic coefficients h_{ijk} = g(A(d_i, d_j), J d_k) in the coordinate
// frame; symmetric in (i, j) by construction, totally symmetric for
// Lagrangian immersions up to rounding.
struct ShapeTensor {
  std::array<std::array<std::array<double, 2>, 2>, 2> h{};
  double cubic_asymmetry() const;
};

struct MeanCurvature {
  std::array<double, 2> coords;  // components of H in the frame {i dL_1, i dL_2}
  double absH2 = 0.0;
  double absH = 0.0;
};

struct PointGeometry {
  double x = 0.0, y = 0.0;

  double g11 = 0.0, g12 = 0.0, g22 = 0.0, det_g = 0.0;
  double gamma[2][2][2] = {};  // Gamma^k_{ij} values, indexed [k][i][j]

  ShapeTensor shape;
  std::array<double, 2> H_coords{};
  double absH2 = 0.0, absH = 0.0;

  std::array<double, 2> alpha{};      // alpha_j = g(JH, d_j)
  std::array<double, 2> JH_coords{};  // (JH)^k = g^{kj} alpha_j

  double K_intrinsic = 0.0;
  double K_gauss = 0.0;

  double nabla_perp_H[2][2] = {};  // lowered components (nabla^perp_i H)_k
  double nabla_perp_H_norm = 0.0;
  double nabla_JH_norm = 0.0;
  double nabla_A_norm = 0.0;
  double rho_N = 0.0;

  double delta_alpha = 0.0;
  double d_alpha = 0.0;

  // Monitored identities / constraints (all magnitudes).
  double res_constraint = 0.0;   // | herm(L,L) -/+ 1 | on lifts, 0 on C^2
  double res_horizontal = 0.0;   // max_j |Re herm(dL_j, iL)| on lifts
  double omega12 = 0.0;          // omega(dL_1, dL_2)
  double res_cubic = 0.0;        // max |h_{ijk} - h_{ikj}|
  double res_trace = 0.0;        // |H|^2 two-route disagreement
  double res_jparallel = 0.0;    // | |nabla JH| - |nabla^perp H| |
};

Metric2 first_fundamental_form(const ImmersionMap& map, double x, double y);
ShapeTensor second_fundamental_form(const ImmersionMap& map, double x, double y);
MeanCurvature mean_curvature(const Metric2& metric, const ShapeTensor& shape);

// Intrinsic K from the metric jets alone (needs order >= 2 jets).
double gaussian_curvature_intrinsic(const Metric2& metric);
// K via the Gauss equation: c + (<A_11, A_22> - |A_12|^2) / det g.
double gaussian_curvature_gauss_equation(const Metric2& metric, const ShapeTensor& shape,
                                         double c);

struct NormalDerivatives {
  double nabla_perp_H[2][2] = {};
  double nabla_perp_H_norm = 0.0;
  double nabla_A_norm = 0.0;
  double rho_N = 0.0;
};
NormalDerivatives normal_derivatives(const ImmersionMap& map, double x, double y);

struct MaslovForm {
  std::array<double, 2> alpha{};
  std::array<double, 2> mu{};  // alpha / pi
};
MaslovForm maslov_form(const ImmersionMap& map, double x, double y);

// Everything at once; the workhorse behind grids and checks.
PointGeometry analyze_point(const ImmersionMap& map, double x, double y);

struct GridSpec {
  int nx = 0, ny = 0;
  Rect window;
  double dx() const { return window.width() / (nx - 1); }
  double dy() const { return window.height() / (ny - 1); }
  double x(int ix) const { return window.x0 + ix * dx(); }
  double y(int iy) const { return window.y0 + iy * dy(); }
  int nodes() const { return nx * ny; }
  int index(int ix, int iy) const { return iy * nx + ix; }
};

struct GridGeometry {
  GridSpec grid;
  std::vector<PointGeometry> pts;  // row-major, iy outer
  const PointGeometry& at(int ix, int iy) const { return pts[grid.index(ix, iy)]; }
};

GridGeometry analyze_grid(const ImmersionMap& map, const GridSpec& grid);

// Grid-level stationarity scalars. delta_alpha and d_alpha are pointwise
// (jet-exact); the Laplace-Beltrami of |H|^2 is a divergence-form finite
// difference, defined on the margin-2 interior only (NaN elsewhere).
// Fewer than 5 interior nodes per axis -> GridTooCoarse.
struct StationarityScalars {
  std::vector<double> delta_alpha;
  std::vector<double> d_alpha;
  std::vector<double> lap_absH2;
  int margin = 2;
};
StationarityScalars stationarity_scalars(const GridGeometry& field);

// Divergence-form Laplace-Beltrami FD of an arbitrary node field over the
// grid's induced metric; margin-2 interior, NaN elsewhere. O(h^2).
std::vector<double> laplace_beltrami_fd(const GridGeometry& field,
                                        const std::vector<double>& f);

// Central-difference gradient components of a node field; margin-1, NaN elsewhere.
std::vector<double> central_dx(const GridSpec& grid, const std::vector<double>& f);
std::vector<double> central_dy(const GridSpec& grid, const std::vector<double>& f);

int fd_interior_margin();

}  // namespace hsl
