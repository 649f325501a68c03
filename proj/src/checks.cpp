#include "hsl/checks.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

namespace hsl {

ToleranceProfile ToleranceProfile::strict() { return {"strict", 1e-10, 1e-6, 1e-12}; }
ToleranceProfile ToleranceProfile::defaults() { return {"default", 1e-8, 1e-5, 1e-10}; }
ToleranceProfile ToleranceProfile::sweep() { return {"sweep", 1e-6, 1e-4, 1e-8}; }

ToleranceProfile ToleranceProfile::by_name(const std::string& name) {
  if (name == "strict") return strict();
  if (name == "default") return defaults();
  if (name == "sweep") return sweep();
  throw Error(ErrorKind::BadParameter, "unknown tolerance profile: " + name);
}

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Accumulates a sup (or signed max) with a deterministic argmax: the
// first node attaining the maximum in row-major scan order wins.
struct SupTracker {
  double worst = -std::numeric_limits<double>::infinity();
  std::array<double, 2> at{kNaN, kNaN};
  void update(double v, double x, double y) {
    if (std::isnan(v)) return;
    if (v > worst) {
      worst = v;
      at = {x, y};
    }
  }
  double value() const { return std::isfinite(worst) ? worst : kNaN; }
};

CheckResult make_result(const std::string& name, const SupTracker& sup, double tol,
                        bool one_sided = false) {
  CheckResult r;
  r.name = name;
  r.sup_residual = sup.value();
  r.tolerance = tol;
  r.pass = !std::isnan(r.sup_residual) && r.sup_residual < tol;
  (void)one_sided;
  r.argmax_point = sup.at;
  return r;
}

}  // namespace

CheckReport run_checks(const ImmersionMap& map, const ExpectedProperties& expected,
                       const std::string& label,
                       const std::vector<std::pair<std::string, double>>& params, int nx,
                       int ny, const ToleranceProfile& profile) {
  if (nx < 9 || ny < 9)
    throw Error(ErrorKind::GridTooCoarse, "run_checks needs a grid of at least 9x9");

  const GridSpec grid{nx, ny, map.domain};
  const GridGeometry field = analyze_grid(map, grid);
  const StationarityScalars stat = stationarity_scalars(field);

  const bool lifted = map.ambient.lifted();
  const double c = map.ambient.c;

  SupTracker lagr, constraint, ham, closed, parH, parA, flatness, minimality, two_route,
      cubic, trace, jpar, ricjh, wintgen, closed_form;
  std::vector<double> absH_values;
  absH_values.reserve(field.pts.size());

  for (int iy = 0; iy < ny; ++iy)
    for (int ix = 0; ix < nx; ++ix) {
      const PointGeometry& p = field.at(ix, iy);
      lagr.update(lifted ? p.res_horizontal : std::abs(p.omega12), p.x, p.y);
      if (lifted) constraint.update(p.res_constraint, p.x, p.y);
      ham.update(std::abs(p.delta_alpha), p.x, p.y);
      closed.update(std::abs(p.d_alpha), p.x, p.y);
      parH.update(p.nabla_perp_H_norm, p.x, p.y);
      parA.update(p.nabla_A_norm, p.x, p.y);
      flatness.update(std::abs(p.K_intrinsic), p.x, p.y);
      minimality.update(p.absH, p.x, p.y);
      two_route.update(std::abs(p.K_intrinsic - p.K_gauss), p.x, p.y);
      cubic.update(p.res_cubic, p.x, p.y);
      trace.update(p.res_trace, p.x, p.y);
      jpar.update(p.res_jparallel, p.x, p.y);
      ricjh.update(std::abs(p.K_intrinsic) * p.absH, p.x, p.y);
      wintgen.update(p.K_intrinsic + p.rho_N - c - p.absH2 / 4.0, p.x, p.y);
      if (expected.constant_absH)
        closed_form.update(std::abs(p.absH - *expected.constant_absH), p.x, p.y);
      absH_values.push_back(p.absH);
    }

  // Theorem-level scalars that need grid derivatives: d|H|^2 Laplacian
  // (Bochner) and dK along JH, both restricted to interior nodes.
  SupTracker bochner, dK_jh;
  {
    std::vector<double> Kfield(field.pts.size());
    for (size_t n = 0; n < field.pts.size(); ++n) Kfield[n] = field.pts[n].K_intrinsic;
    const auto Kx = central_dx(grid, Kfield);
    const auto Ky = central_dy(grid, Kfield);
    const int m = stat.margin;
    for (int iy = m; iy < ny - m; ++iy)
      for (int ix = m; ix < nx - m; ++ix) {
        const int n = grid.index(ix, iy);
        const PointGeometry& p = field.pts[n];
        bochner.update(
            std::abs(0.5 * stat.lap_absH2[n] - p.K_intrinsic * p.absH2 -
                     p.nabla_perp_H_norm * p.nabla_perp_H_norm),
            p.x, p.y);
        dK_jh.update(std::abs(p.JH_coords[0] * Kx[n] + p.JH_coords[1] * Ky[n]), p.x, p.y);
      }
  }

  // Spread of |H| over the grid; two-pass for stability.
  double mean = 0.0;
  for (double v : absH_values) mean += v;
  mean /= double(absH_values.size());
  double var = 0.0;
  for (double v : absH_values) var += (v - mean) * (v - mean);
  const double stddev_absH = std::sqrt(var / double(absH_values.size()));

  const double alg = profile.algebraic_tol;
  const double fd = profile.fd_tol;

  CheckReport report;
  report.entry = label;
  report.params = params;
  report.nx = nx;
  report.ny = ny;
  report.profile = profile.name;

  auto& out = report.checks;
  out.push_back(make_result("lagrangian", lagr, alg));
  if (lifted) out.push_back(make_result("lift_constraint", constraint, profile.constraint_tol));
  out.push_back(make_result("hamiltonian_stationary", ham, alg));
  out.push_back(make_result("maslov_closed", closed, alg));
  out.push_back(make_result("parallel_H", parH, alg));
  out.push_back(make_result("parallel_A", parA, 100.0 * alg));
  {
    CheckResult r;
    r.name = "constant_H";
    r.sup_residual = stddev_absH;
    r.tolerance = alg;
    r.pass = stddev_absH < alg;
    r.argmax_point = {kNaN, kNaN};
    out.push_back(r);
  }
  if (expected.constant_absH)
    out.push_back(make_result("closed_form_H", closed_form, 0.01 * alg));
  if (expected.flat) out.push_back(make_result("flat", flatness, 100.0 * alg));
  if (expected.minimal) out.push_back(make_result("minimal", minimality, alg));
  {
    // min(sup|K|, sup|H|): a complete surface of this kind is flat or minimal.
    CheckResult r;
    r.name = "flat_or_minimal";
    const bool use_K = flatness.value() <= minimality.value();
    r.sup_residual = use_K ? flatness.value() : minimality.value();
    r.tolerance = alg;
    r.pass = r.sup_residual < alg;
    r.argmax_point = use_K ? flatness.at : minimality.at;
    out.push_back(r);
  }
  out.push_back(make_result("two_route_curvature", two_route, 100.0 * alg));
  out.push_back(make_result("cubic_symmetry", cubic, alg));
  out.push_back(make_result("trace_consistency", trace, 0.01 * alg));
  out.push_back(make_result("jparallel_transfer", jpar, alg));
  out.push_back(make_result("ric_jh_vanishes", ricjh, alg));
  out.push_back(make_result("scalar_curv_along_jh", dK_jh, 0.1 * fd));
  out.push_back(make_result("bochner_residual", bochner, fd));
  out.push_back(make_result("wintgen", wintgen, alg, true));

  report.overall_pass = true;
  for (const auto& r : out) report.overall_pass = report.overall_pass && r.pass;
  return report;
}

CheckReport run_checks(const CatalogEntry& entry, int nx, int ny,
                       const ToleranceProfile& profile) {
  return run_checks(entry.map, entry.expected, entry.id, entry.params, nx, ny, profile);
}

namespace {

// Nodes and weights for Gauss-Legendre on [-1, 1], orders 1..8.
void gauss_legendre(int order, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.resize(order);
  weights.resize(order);
  // Newton iteration on Legendre polynomials; plenty for order <= 32.
  for (int i = 0; i < order; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      const double dp = order * (x * p1 - p0) / (x * x - 1.0);
      const double step = p1 / dp;
      x -= step;
      if (std::abs(step) < 1e-15) break;
    }
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= order; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    const double dp = order * (x * p1 - p0) / (x * x - 1.0);
    nodes[order - 1 - i] = x;
    weights[order - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
}

// Pairwise sum for a reproducible, accurate reduction.
double pairwise_sum(std::vector<double>& v, size_t lo, size_t hi) {
  if (hi - lo <= 8) {
    double s = 0.0;
    for (size_t i = lo; i < hi; ++i) s += v[i];
    return s;
  }
  const size_t mid = lo + (hi - lo) / 2;
  return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

}  // namespace

double gauss_bonnet_flat(const CatalogEntry& entry, int cells_per_axis, int gl_order) {
  if (!(entry.map.periodic[0] && entry.map.periodic[1]))
    throw Error(ErrorKind::Unsupported,
                "gauss_bonnet_flat needs exact periodicity on both axes");
  std::vector<double> nodes, weights;
  gauss_legendre(gl_order, nodes, weights);
  const Rect d = entry.map.domain;
  const double hx = d.width() / cells_per_axis;
  const double hy = d.height() / cells_per_axis;
  std::vector<double> contributions;
  contributions.reserve(size_t(cells_per_axis) * cells_per_axis * gl_order * gl_order);
  for (int cy = 0; cy < cells_per_axis; ++cy)
    for (int cx = 0; cx < cells_per_axis; ++cx)
      for (int iy = 0; iy < gl_order; ++iy)
        for (int ix = 0; ix < gl_order; ++ix) {
          const double x = d.x0 + (cx + 0.5 * (1.0 + nodes[ix])) * hx;
          const double y = d.y0 + (cy + 0.5 * (1.0 + nodes[iy])) * hy;
          const PointGeometry p = analyze_point(entry.map, x, y);
          contributions.push_back(p.K_intrinsic * std::sqrt(p.det_g) * weights[ix] *
                                  weights[iy] * 0.25 * hx * hy);
        }
  return std::abs(pairwise_sum(contributions, 0, contributions.size()));
}

std::vector<double> growth_ratio(const std::vector<double>& f_values,
                                 const std::vector<double>& vol_values, double p,
                                 const std::vector<double>& r_list) {
  if (!(p > 2.0)) throw Error(ErrorKind::BadParameter, "growth_ratio needs p > 2");
  if (f_values.size() != r_list.size() || vol_values.size() != r_list.size())
    throw Error(ErrorKind::BadParameter, "growth_ratio sample lengths disagree");
  double prev = -std::numeric_limits<double>::infinity();
  for (double r : r_list) {
    if (!(r > 1.0))
      throw Error(ErrorKind::BadParameter, "growth_ratio needs r > 1 (log r must be positive)");
    if (!(r > prev))
      throw Error(ErrorKind::BadParameter, "growth_ratio needs a strictly increasing r list");
    prev = r;
  }
  std::vector<double> out(r_list.size());
  for (size_t i = 0; i < r_list.size(); ++i) {
    const double r = r_list[i];
    out[i] = std::pow(f_values[i], p) * vol_values[i] / (r * r * std::log(r));
  }
  return out;
}

double bochner_fd_probe_error(const CatalogEntry& entry, int nx, int ny) {
  const GridSpec grid{nx, ny, entry.map.domain};
  const GridGeometry field = analyze_grid(entry.map, grid);
  std::vector<double> f(field.pts.size());
  for (size_t n = 0; n < field.pts.size(); ++n)
    f[n] = std::sin(field.pts[n].x) * std::cos(field.pts[n].y);
  const auto lap_fd = laplace_beltrami_fd(field, f);

  const int m = fd_interior_margin();
  double worst = 0.0;
  for (int iy = m; iy < ny - m; ++iy)
    for (int ix = m; ix < nx - m; ++ix) {
      const int n = grid.index(ix, iy);
      const PointGeometry& p = field.pts[n];
      const double s = std::sin(p.x), c = std::cos(p.x);
      const double sy = std::sin(p.y), cy = std::cos(p.y);
      const double fx = c * cy, fy = -s * sy;
      const double fxx = -s * cy, fxy = -c * sy, fyy = -s * cy;
      const double gi11 = p.g22 / p.det_g, gi12 = -p.g12 / p.det_g, gi22 = p.g11 / p.det_g;
      // Laplace-Beltrami of f with analytic metric data:
      // g^{ij} (d_i d_j f - Gamma^k_{ij} d_k f)
      double lap = gi11 * fxx + 2.0 * gi12 * fxy + gi22 * fyy;
      const double d1[2] = {fx, fy};
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          const double gij = (i == 0 ? (j == 0 ? gi11 : gi12) : (j == 0 ? gi12 : gi22));
          for (int k = 0; k < 2; ++k) lap -= gij * p.gamma[k][i][j] * d1[k];
        }
      worst = std::max(worst, std::abs(lap_fd[n] - lap));
    }
  return worst;
}

double loglog_slope(const std::vector<double>& hs, const std::vector<double>& errs) {
  if (hs.size() != errs.size() || hs.size() < 2)
    throw Error(ErrorKind::ContractViolation, "loglog_slope needs matched samples");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = double(hs.size());
  for (size_t i = 0; i < hs.size(); ++i) {
    const double lx = std::log(hs[i]);
    const double ly = std::log(std::max(errs[i], 1e-300));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace hsl
