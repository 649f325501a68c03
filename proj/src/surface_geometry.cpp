#include "hsl/surface_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace hsl {

namespace {

using CVec = std::array<CJet, 3>;

constexpr int kFdMargin = 2;
constexpr int kMinInteriorNodes = 5;

// Signed Hermitian pairing on jet-valued lift vectors.
CJet hermj(const CVec& u, const CVec& v, const AmbientSpace& amb) {
  CJet acc(std::min(u[0].order(), v[0].order()));
  for (int k = 0; k < amb.lift_dim; ++k)
    acc += (u[k] * conj(v[k])) * double(amb.signature[k]);
  return acc;
}

CVec times_i(const CVec& u) { return {hsl::times_i(u[0]), hsl::times_i(u[1]), hsl::times_i(u[2])}; }

CVec d_vec(const CVec& u, int axis) {
  return {u[0].derivative(axis), u[1].derivative(axis), u[2].derivative(axis)};
}

// Full jet state at one parameter point; every downstream quantity is a
// contraction of these.
struct GeometryJets {
  const AmbientSpace* amb = nullptr;
  double x = 0.0, y = 0.0;
  CVec L;                // order 3
  CVec dL[2];            // order 2
  CVec ddL[2][2];        // order 1
  RJet g[2][2];          // order 2
  RJet detg;             // order 2
  RJet ginv[2][2];       // order 2
  RJet gamma[2][2][2];   // order 1, [k][i][j]
  RJet h[2][2][2];       // order 1
  RJet trH[2];           // g^{ij} h_{ijk}, lowered index
  RJet Hup[2];           // order 1
  RJet absH2;            // order 1
  CVec Hlift;            // order 1
  RJet alpha[2];         // order 1
  RJet JHup[2];          // order 1
};

GeometryJets build_jets(const ImmersionMap& map, double x, double y) {
  GeometryJets G;
  G.amb = &map.ambient;
  G.x = x;
  G.y = y;
  G.L = eval_jet(map, x, y, std::min(map.max_order, kMaxJetOrder));
  for (int i = 0; i < 2; ++i) G.dL[i] = d_vec(G.L, i);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) G.ddL[i][j] = d_vec(G.dL[i], j);

  for (int i = 0; i < 2; ++i)
    for (int j = i; j < 2; ++j) {
      G.g[i][j] = real(hermj(G.dL[i], G.dL[j], *G.amb));
      G.g[j][i] = G.g[i][j];
    }
  G.detg = G.g[0][0] * G.g[1][1] - G.g[0][1] * G.g[0][1];
  if (!(G.detg.value() > kDegenerateGramTol && G.g[0][0].value() > 0.0)) {
    std::ostringstream msg;
    msg << "degenerate induced metric at (x, y) = (" << x << ", " << y << ")";
    throw Error(ErrorKind::DegenerateImmersion, msg.str());
  }
  const RJet inv_det = recip(G.detg);
  G.ginv[0][0] = G.g[1][1] * inv_det;
  G.ginv[1][1] = G.g[0][0] * inv_det;
  G.ginv[0][1] = -(G.g[0][1] * inv_det);
  G.ginv[1][0] = G.ginv[0][1];

  RJet dg[2][2][2];  // dg[l][i][j] = d_l g_{ij}
  for (int l = 0; l < 2; ++l)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) dg[l][i][j] = G.g[i][j].derivative(l);
  for (int k = 0; k < 2; ++k)
    for (int i = 0; i < 2; ++i)
      for (int j = i; j < 2; ++j) {
        RJet acc(G.ginv[0][0].order() - 1);
        for (int l = 0; l < 2; ++l)
          acc += G.ginv[k][l] * (dg[i][j][l] + dg[j][i][l] - dg[l][i][j]);
        G.gamma[k][i][j] = acc * 0.5;
        G.gamma[k][j][i] = G.gamma[k][i][j];
      }

  // h_{ijk}: the horizontal-normal block coefficients of the flat second
  // derivative, extracted with the signed pairing against {i dL_k};
  // Re herm(u, i v) = Im herm(u, v).
  for (int i = 0; i < 2; ++i)
    for (int j = i; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        G.h[i][j][k] = imag(hermj(G.ddL[i][j], G.dL[k], *G.amb));
        G.h[j][i][k] = G.h[i][j][k];
      }

  for (int k = 0; k < 2; ++k) {
    RJet acc(G.h[0][0][0].order());
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) acc += G.ginv[i][j] * G.h[i][j][k];
    G.trH[k] = acc;
  }
  for (int m = 0; m < 2; ++m) {
    RJet acc(G.trH[0].order());
    for (int k = 0; k < 2; ++k) acc += G.ginv[m][k] * G.trH[k];
    G.Hup[m] = acc;
  }
  {
    RJet acc(G.Hup[0].order());
    for (int m = 0; m < 2; ++m)
      for (int n = 0; n < 2; ++n) acc += G.g[m][n] * G.Hup[m] * G.Hup[n];
    G.absH2 = acc;
  }
  for (int k = 0; k < 3; ++k) {
    CJet acc(G.Hup[0].order());
    for (int m = 0; m < 2; ++m) acc += G.Hup[m] * hsl::times_i(G.dL[m][k]);
    G.Hlift[k] = acc;
  }
  for (int j = 0; j < 2; ++j)
    G.alpha[j] = real(hermj(times_i(G.Hlift), G.dL[j], *G.amb));
  for (int k = 0; k < 2; ++k) {
    RJet acc(G.alpha[0].order());
    for (int j = 0; j < 2; ++j) acc += G.ginv[k][j] * G.alpha[j];
    G.JHup[k] = acc;
  }
  return G;
}

double intrinsic_K(const RJet g[2][2], const RJet gamma[2][2][2], double det) {
  // K = <R(d1, d2) d2, d1> / det g with the coordinate curvature tensor
  // R^l_{122} = d_1 Gamma^l_{22} - d_2 Gamma^l_{12} + Gamma^l_{1m} Gamma^m_{22}
  //             - Gamma^l_{2m} Gamma^m_{12}.
  double num = 0.0;
  for (int l = 0; l < 2; ++l) {
    double R = gamma[l][1][1].derivative(0).value() - gamma[l][0][1].derivative(1).value();
    for (int m = 0; m < 2; ++m)
      R += gamma[l][0][m].value() * gamma[m][1][1].value() -
           gamma[l][1][m].value() * gamma[m][0][1].value();
    num += g[0][l].value() * R;
  }
  return num / det;
}

double gauss_equation_K(const double ginv[2][2], const ShapeTensor& shape, double c,
                        double det) {
  double extr = 0.0;
  for (int k = 0; k < 2; ++k)
    for (int l = 0; l < 2; ++l)
      extr += ginv[k][l] *
              (shape.h[0][0][k] * shape.h[1][1][l] - shape.h[0][1][k] * shape.h[0][1][l]);
  return c + extr / det;
}

// Normal curvature entry <R_perp(d1, d2) J e_1, J e_2> for the
// Gram-Schmidt orthonormal frame e_a, obtained by differentiating the
// normal connection coefficients nu_i^{ab} = Re herm(d_i(i e_a), i e_b).
// The bracket term of the curvature drops: 2x2 skew matrices commute.
double normal_curvature_coordinate(const GeometryJets& G) {
  const RJet w1 = recip(sqrt(G.g[0][0]));
  CVec e1, u2, e2;
  for (int k = 0; k < 3; ++k) e1[k] = G.dL[0][k] * w1;
  const RJet proj = G.g[0][1] * recip(G.g[0][0]);
  for (int k = 0; k < 3; ++k) u2[k] = G.dL[1][k] - G.dL[0][k] * proj;
  const RJet n2sq = G.g[1][1] - G.g[0][1] * G.g[0][1] * recip(G.g[0][0]);
  const RJet w2 = recip(sqrt(n2sq));
  for (int k = 0; k < 3; ++k) e2[k] = u2[k] * w2;

  const CVec ie1 = times_i(e1), ie2 = times_i(e2);
  RJet nu[2];  // nu_i^{12}
  for (int i = 0; i < 2; ++i)
    nu[i] = real(hermj(d_vec(ie1, i), ie2, *G.amb));
  return nu[1].derivative(0).value() - nu[0].derivative(1).value();
}

PointGeometry finish_point(const GeometryJets& G) {
  PointGeometry p;
  p.x = G.x;
  p.y = G.y;
  p.g11 = G.g[0][0].value();
  p.g12 = G.g[0][1].value();
  p.g22 = G.g[1][1].value();
  p.det_g = G.detg.value();
  for (int k = 0; k < 2; ++k)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) p.gamma[k][i][j] = G.gamma[k][i][j].value();

  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) p.shape.h[i][j][k] = G.h[i][j][k].value();

  p.H_coords = {G.Hup[0].value(), G.Hup[1].value()};
  p.absH2 = G.absH2.value();
  p.absH = std::sqrt(std::max(0.0, p.absH2));
  p.alpha = {G.alpha[0].value(), G.alpha[1].value()};
  p.JH_coords = {G.JHup[0].value(), G.JHup[1].value()};

  const double ginv_v[2][2] = {{G.ginv[0][0].value(), G.ginv[0][1].value()},
                               {G.ginv[1][0].value(), G.ginv[1][1].value()}};
  const double g_v[2][2] = {{p.g11, p.g12}, {p.g12, p.g22}};

  p.K_intrinsic = intrinsic_K(G.g, G.gamma, p.det_g);
  p.K_gauss = gauss_equation_K(ginv_v, p.shape, G.amb->c, p.det_g);

  // nabla^perp H: horizontal-normal coefficients of the flat derivative
  // of the mean curvature lift.
  for (int i = 0; i < 2; ++i) {
    const CVec dH = d_vec(G.Hlift, i);
    for (int k = 0; k < 2; ++k)
      p.nabla_perp_H[i][k] = imag(hermj(dH, G.dL[k], *G.amb)).value();
  }
  {
    double acc = 0.0;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k)
          for (int l = 0; l < 2; ++l)
            acc += ginv_v[i][j] * ginv_v[k][l] * p.nabla_perp_H[i][k] * p.nabla_perp_H[j][l];
    p.nabla_perp_H_norm = std::sqrt(std::max(0.0, acc));
  }

  // Tangential covariant derivative of JH, for the parallelism-transfer check.
  {
    double dJH[2][2];  // (nabla_i JH)^k
    for (int i = 0; i < 2; ++i)
      for (int k = 0; k < 2; ++k) {
        double v = G.JHup[k].derivative(i).value();
        for (int m = 0; m < 2; ++m) v += p.gamma[k][i][m] * G.JHup[m].value();
        dJH[i][k] = v;
      }
    double acc = 0.0;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k)
          for (int l = 0; l < 2; ++l)
            acc += ginv_v[i][j] * g_v[k][l] * dJH[i][k] * dJH[j][l];
    p.nabla_JH_norm = std::sqrt(std::max(0.0, acc));
  }
  p.res_jparallel = std::abs(p.nabla_JH_norm - p.nabla_perp_H_norm);

  // (nabla h)_{lijk} = d_l h_{ijk} - Gamma-corrections on all three slots;
  // equals g((nabla_l A)(d_i, d_j), J d_k).
  {
    double nh[2][2][2][2];
    for (int l = 0; l < 2; ++l)
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          for (int k = 0; k < 2; ++k) {
            double v = G.h[i][j][k].derivative(l).value();
            for (int m = 0; m < 2; ++m)
              v -= p.gamma[m][l][i] * p.shape.h[m][j][k] +
                   p.gamma[m][l][j] * p.shape.h[i][m][k] +
                   p.gamma[m][l][k] * p.shape.h[i][j][m];
            nh[l][i][j][k] = v;
          }
    double acc = 0.0;
    for (int l = 0; l < 2; ++l)
      for (int l2 = 0; l2 < 2; ++l2)
        for (int i = 0; i < 2; ++i)
          for (int i2 = 0; i2 < 2; ++i2)
            for (int j = 0; j < 2; ++j)
              for (int j2 = 0; j2 < 2; ++j2)
                for (int k = 0; k < 2; ++k)
                  for (int k2 = 0; k2 < 2; ++k2)
                    acc += ginv_v[l][l2] * ginv_v[i][i2] * ginv_v[j][j2] * ginv_v[k][k2] *
                           nh[l][i][j][k] * nh[l2][i2][j2][k2];
    p.nabla_A_norm = std::sqrt(std::max(0.0, acc));
  }

  p.rho_N = std::abs(normal_curvature_coordinate(G)) / std::sqrt(p.det_g);

  // Stationarity scalars (pointwise, jet-exact).
  {
    double acc = 0.0;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        double cov = G.alpha[j].derivative(i).value();
        for (int k = 0; k < 2; ++k) cov -= p.gamma[k][i][j] * p.alpha[k];
        acc += ginv_v[i][j] * cov;
      }
    p.delta_alpha = -acc;
  }
  p.d_alpha = G.alpha[1].derivative(0).value() - G.alpha[0].derivative(1).value();

  // Monitored identities.
  if (G.amb->lifted()) {
    p.res_constraint =
        std::abs(real(hermj(G.L, G.L, *G.amb)).value() - G.amb->lift_target());
    const CVec iL = times_i(G.L);
    for (int j = 0; j < 2; ++j)
      p.res_horizontal =
          std::max(p.res_horizontal, std::abs(real(hermj(G.dL[j], iL, *G.amb)).value()));
  }
  p.omega12 = real(hermj(times_i(G.dL[0]), G.dL[1], *G.amb)).value();
  p.res_cubic = p.shape.cubic_asymmetry();
  {
    double alt = 0.0;
    for (int k = 0; k < 2; ++k)
      for (int l = 0; l < 2; ++l) alt += ginv_v[k][l] * G.trH[k].value() * G.trH[l].value();
    p.res_trace = std::abs(p.absH2 - alt);
  }
  return p;
}

}  // namespace

double Metric2::det() const { return g11.value() * g22.value() - g12.value() * g12.value(); }

bool Metric2::positive_definite(double tol) const {
  return g11.value() > 0.0 && det() > tol;
}

std::array<std::array<std::array<RJet, 2>, 2>, 2> Metric2::christoffel() const {
  const RJet g[2][2] = {{g11, g12}, {g12, g22}};
  const RJet invd = recip(g11 * g22 - g12 * g12);
  const RJet gi[2][2] = {{g22 * invd, -(g12 * invd)}, {-(g12 * invd), g11 * invd}};
  RJet dg[2][2][2];
  for (int l = 0; l < 2; ++l)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) dg[l][i][j] = g[i][j].derivative(l);
  std::array<std::array<std::array<RJet, 2>, 2>, 2> out;
  for (int k = 0; k < 2; ++k)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        RJet acc(g11.order() - 1);
        for (int l = 0; l < 2; ++l)
          acc += gi[k][l] * (dg[i][j][l] + dg[j][i][l] - dg[l][i][j]);
        out[k][i][j] = acc * 0.5;
      }
  return out;
}

double ShapeTensor::cubic_asymmetry() const {
  double worst = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        worst = std::max(worst, std::abs(h[i][j][k] - h[i][k][j]));
  return worst;
}

Metric2 first_fundamental_form(const ImmersionMap& map, double x, double y) {
  const GeometryJets G = build_jets(map, x, y);
  return Metric2{G.g[0][0], G.g[0][1], G.g[1][1]};
}

ShapeTensor second_fundamental_form(const ImmersionMap& map, double x, double y) {
  const GeometryJets G = build_jets(map, x, y);
  ShapeTensor s;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) s.h[i][j][k] = G.h[i][j][k].value();
  return s;
}

MeanCurvature mean_curvature(const Metric2& metric, const ShapeTensor& shape) {
  if (!metric.positive_definite())
    throw Error(ErrorKind::DegenerateImmersion, "mean_curvature on a degenerate metric");
  const double det = metric.det();
  const double gi[2][2] = {{metric.g22.value() / det, -metric.g12.value() / det},
                           {-metric.g12.value() / det, metric.g11.value() / det}};
  const double g[2][2] = {{metric.g11.value(), metric.g12.value()},
                          {metric.g12.value(), metric.g22.value()}};
  double tr[2] = {0.0, 0.0};
  for (int k = 0; k < 2; ++k)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) tr[k] += gi[i][j] * shape.h[i][j][k];
  MeanCurvature H;
  for (int m = 0; m < 2; ++m)
    for (int k = 0; k < 2; ++k) H.coords[m] += gi[m][k] * tr[k];
  for (int m = 0; m < 2; ++m)
    for (int n = 0; n < 2; ++n) H.absH2 += g[m][n] * H.coords[m] * H.coords[n];
  H.absH = std::sqrt(std::max(0.0, H.absH2));
  return H;
}

double gaussian_curvature_intrinsic(const Metric2& metric) {
  if (metric.g11.order() < 2)
    throw Error(ErrorKind::ContractViolation,
                "intrinsic curvature needs order-2 metric jets");
  if (!metric.positive_definite())
    throw Error(ErrorKind::DegenerateImmersion, "intrinsic curvature of a degenerate metric");
  const RJet g[2][2] = {{metric.g11, metric.g12}, {metric.g12, metric.g22}};
  const auto gamma = metric.christoffel();
  RJet gm[2][2][2];
  for (int k = 0; k < 2; ++k)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) gm[k][i][j] = gamma[k][i][j];
  return intrinsic_K(g, gm, metric.det());
}

double gaussian_curvature_gauss_equation(const Metric2& metric, const ShapeTensor& shape,
                                         double c) {
  const double det = metric.det();
  const double gi[2][2] = {{metric.g22.value() / det, -metric.g12.value() / det},
                           {-metric.g12.value() / det, metric.g11.value() / det}};
  return gauss_equation_K(gi, shape, c, det);
}

NormalDerivatives normal_derivatives(const ImmersionMap& map, double x, double y) {
  const PointGeometry p = analyze_point(map, x, y);
  NormalDerivatives out;
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) out.nabla_perp_H[i][k] = p.nabla_perp_H[i][k];
  out.nabla_perp_H_norm = p.nabla_perp_H_norm;
  out.nabla_A_norm = p.nabla_A_norm;
  out.rho_N = p.rho_N;
  return out;
}

MaslovForm maslov_form(const ImmersionMap& map, double x, double y) {
  const PointGeometry p = analyze_point(map, x, y);
  constexpr double pi = 3.14159265358979323846;
  return MaslovForm{p.alpha, {p.alpha[0] / pi, p.alpha[1] / pi}};
}

PointGeometry analyze_point(const ImmersionMap& map, double x, double y) {
  return finish_point(build_jets(map, x, y));
}

GridGeometry analyze_grid(const ImmersionMap& map, const GridSpec& grid) {
  if (grid.nx < 2 || grid.ny < 2)
    throw Error(ErrorKind::GridTooCoarse, "grid needs at least 2 nodes per axis");
  GridGeometry out;
  out.grid = grid;
  out.pts.reserve(grid.nodes());
  for (int iy = 0; iy < grid.ny; ++iy)
    for (int ix = 0; ix < grid.nx; ++ix)
      out.pts.push_back(analyze_point(map, grid.x(ix), grid.y(iy)));
  return out;
}

int fd_interior_margin() { return kFdMargin; }

std::vector<double> central_dx(const GridSpec& grid, const std::vector<double>& f) {
  std::vector<double> out(grid.nodes(), std::numeric_limits<double>::quiet_NaN());
  const double inv2h = 1.0 / (2.0 * grid.dx());
  for (int iy = 0; iy < grid.ny; ++iy)
    for (int ix = 1; ix < grid.nx - 1; ++ix)
      out[grid.index(ix, iy)] =
          (f[grid.index(ix + 1, iy)] - f[grid.index(ix - 1, iy)]) * inv2h;
  return out;
}

std::vector<double> central_dy(const GridSpec& grid, const std::vector<double>& f) {
  std::vector<double> out(grid.nodes(), std::numeric_limits<double>::quiet_NaN());
  const double inv2h = 1.0 / (2.0 * grid.dy());
  for (int ix = 0; ix < grid.nx; ++ix)
    for (int iy = 1; iy < grid.ny - 1; ++iy)
      out[grid.index(ix, iy)] =
          (f[grid.index(ix, iy + 1)] - f[grid.index(ix, iy - 1)]) * inv2h;
  return out;
}

std::vector<double> laplace_beltrami_fd(const GridGeometry& field,
                                        const std::vector<double>& f) {
  const GridSpec& grid = field.grid;
  if (grid.nx - 2 * kFdMargin < kMinInteriorNodes || grid.ny - 2 * kFdMargin < kMinInteriorNodes)
    throw Error(ErrorKind::GridTooCoarse,
                "finite-difference checks need at least a 9x9 grid");
  const auto fx = central_dx(grid, f);
  const auto fy = central_dy(grid, f);
  // sqrt(g) g^{ij} d_j f at margin-1 nodes; metric entries are analytic.
  std::vector<double> flux1(grid.nodes(), std::numeric_limits<double>::quiet_NaN());
  std::vector<double> flux2(grid.nodes(), std::numeric_limits<double>::quiet_NaN());
  for (int iy = 1; iy < grid.ny - 1; ++iy)
    for (int ix = 1; ix < grid.nx - 1; ++ix) {
      const int n = grid.index(ix, iy);
      const PointGeometry& p = field.pts[n];
      const double sg = std::sqrt(p.det_g);
      const double gi11 = p.g22 / p.det_g, gi12 = -p.g12 / p.det_g, gi22 = p.g11 / p.det_g;
      flux1[n] = sg * (gi11 * fx[n] + gi12 * fy[n]);
      flux2[n] = sg * (gi12 * fx[n] + gi22 * fy[n]);
    }
  std::vector<double> lap(grid.nodes(), std::numeric_limits<double>::quiet_NaN());
  const double inv2hx = 1.0 / (2.0 * grid.dx());
  const double inv2hy = 1.0 / (2.0 * grid.dy());
  for (int iy = kFdMargin; iy < grid.ny - kFdMargin; ++iy)
    for (int ix = kFdMargin; ix < grid.nx - kFdMargin; ++ix) {
      const int n = grid.index(ix, iy);
      const double div =
          (flux1[grid.index(ix + 1, iy)] - flux1[grid.index(ix - 1, iy)]) * inv2hx +
          (flux2[grid.index(ix, iy + 1)] - flux2[grid.index(ix, iy - 1)]) * inv2hy;
      lap[n] = div / std::sqrt(field.pts[n].det_g);
    }
  return lap;
}

StationarityScalars stationarity_scalars(const GridGeometry& field) {
  StationarityScalars out;
  out.margin = kFdMargin;
  out.delta_alpha.reserve(field.pts.size());
  out.d_alpha.reserve(field.pts.size());
  std::vector<double> absH2(field.pts.size());
  for (size_t n = 0; n < field.pts.size(); ++n) {
    out.delta_alpha.push_back(field.pts[n].delta_alpha);
    out.d_alpha.push_back(field.pts[n].d_alpha);
    absH2[n] = field.pts[n].absH2;
  }
  out.lap_absH2 = laplace_beltrami_fd(field, absH2);
  return out;
}

}  // namespace hsl
