#include "hsl/variation.hpp"

#include <cmath>
#include <random>

namespace hsl {

namespace {

// Support is treated as ended a hair before t = 1; exp(-1/(1-t^2)) is
// below double underflow long before that.
constexpr double kSupportCut = 1.0 - 1e-9;

}  // namespace

double BumpFunction::value(double x, double y) const {
  const double t2 =
      ((x - x0) * (x - x0) + (y - y0) * (y - y0)) / (radius * radius);
  if (t2 >= kSupportCut) return 0.0;
  return amplitude * std::exp(-1.0 / (1.0 - t2));
}

RJet BumpFunction::eval(const RJet& x, const RJet& y) const {
  const RJet dx = x - x0, dy = y - y0;
  const RJet t2 = (dx * dx + dy * dy) * (1.0 / (radius * radius));
  if (t2.value() >= kSupportCut) return RJet(x.order());
  return exp(-recip(1.0 - t2)) * amplitude;
}

ImmersionMap hamiltonian_deform(const ImmersionMap& base, const BumpFunction& f, double t) {
  if (base.ambient.lifted())
    throw Error(ErrorKind::Unsupported,
                "hamiltonian_deform is defined for the flat ambient only");
  const Rect d = base.domain;
  if (!(f.x0 - f.radius > d.x0 && f.x0 + f.radius < d.x1 && f.y0 - f.radius > d.y0 &&
        f.y0 + f.radius < d.y1))
    throw Error(ErrorKind::BadParameter,
                "bump support must lie strictly inside the domain");

  ImmersionMap out = base;
  out.max_order = base.max_order - 1;  // the gradient costs one jet order
  out.eval = [base, f, t](const RJet& x, const RJet& y) -> std::array<CJet, 3> {
    const int o = x.order();
    const RJet xs = RJet::variable(o + 1, x.value(), 0);
    const RJet ys = RJet::variable(o + 1, y.value(), 1);
    const auto F = base.eval(xs, ys);
    const CJet dF[2][2] = {{F[0].derivative(0), F[1].derivative(0)},
                           {F[0].derivative(1), F[1].derivative(1)}};
    RJet g[2][2];
    for (int i = 0; i < 2; ++i)
      for (int j = i; j < 2; ++j) {
        g[i][j] = real(dF[i][0] * conj(dF[j][0]) + dF[i][1] * conj(dF[j][1]));
        g[j][i] = g[i][j];
      }
    const RJet inv_det = recip(g[0][0] * g[1][1] - g[0][1] * g[0][1]);
    const RJet gi[2][2] = {{g[1][1] * inv_det, -(g[0][1] * inv_det)},
                           {-(g[0][1] * inv_det), g[0][0] * inv_det}};
    const RJet fj = f.eval(xs, ys);
    const RJet df[2] = {fj.derivative(0), fj.derivative(1)};
    RJet grad[2];
    for (int i = 0; i < 2; ++i) grad[i] = gi[i][0] * df[0] + gi[i][1] * df[1];
    std::array<CJet, 3> out_jets;
    for (int k = 0; k < 2; ++k) {
      const CJet push = grad[0] * dF[0][k] + grad[1] * dF[1][k];
      // Truncate the base component back to the requested order before adding.
      CJet Fk(o);
      for (int m = 0; m < Fk.terms(); ++m) Fk.raw()[m] = F[k].raw()[m];
      out_jets[k] = Fk + times_i(push) * t;
    }
    out_jets[2] = CJet(o);
    return out_jets;
  };
  return out;
}

double area(const ImmersionMap& map, const Rect& region, int cells_x, int cells_y,
            int gl_order) {
  if (!(region.x0 >= map.domain.x0 - 1e-12 && region.x1 <= map.domain.x1 + 1e-12 &&
        region.y0 >= map.domain.y0 - 1e-12 && region.y1 <= map.domain.y1 + 1e-12))
    throw Error(ErrorKind::BadParameter, "quadrature region must lie inside the domain");
  if (gl_order < 1 || gl_order > 32)
    throw Error(ErrorKind::BadParameter, "quadrature order must be in [1, 32]");

  // Gauss-Legendre nodes/weights on [-1, 1] by Newton on the recurrence.
  std::vector<double> nodes(gl_order), weights(gl_order);
  for (int i = 0; i < gl_order; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (gl_order + 0.5));
    double p1 = 0.0, dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      p1 = x;
      for (int k = 2; k <= gl_order; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = gl_order * (x * p1 - p0) / (x * x - 1.0);
      const double step = p1 / dp;
      x -= step;
      if (std::abs(step) < 1e-15) break;
    }
    nodes[i] = x;
    weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }

  const double hx = region.width() / cells_x;
  const double hy = region.height() / cells_y;
  std::vector<double> contributions;
  contributions.reserve(size_t(cells_x) * cells_y * gl_order * gl_order);
  for (int cy = 0; cy < cells_y; ++cy)
    for (int cx = 0; cx < cells_x; ++cx)
      for (int iy = 0; iy < gl_order; ++iy)
        for (int ix = 0; ix < gl_order; ++ix) {
          const double x = region.x0 + (cx + 0.5 * (1.0 + nodes[ix])) * hx;
          const double y = region.y0 + (cy + 0.5 * (1.0 + nodes[iy])) * hy;
          const auto J = map.eval(RJet::variable(1, x, 0), RJet::variable(1, y, 1));
          double g[2][2] = {};
          for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
              double acc = 0.0;
              for (int k = 0; k < map.ambient.lift_dim; ++k)
                acc += map.ambient.signature[k] *
                       (J[k].derivative(i).value() * std::conj(J[k].derivative(j).value()))
                           .real();
              g[i][j] = acc;
            }
          const double det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
          contributions.push_back(std::sqrt(std::max(0.0, det)) * weights[ix] * weights[iy] *
                                  0.25 * hx * hy);
        }

  // Pairwise summation, fixed order.
  std::function<double(size_t, size_t)> reduce = [&](size_t lo, size_t hi) -> double {
    if (hi - lo <= 8) {
      double s = 0.0;
      for (size_t i = lo; i < hi; ++i) s += contributions[i];
      return s;
    }
    const size_t mid = lo + (hi - lo) / 2;
    return reduce(lo, mid) + reduce(mid, hi);
  };
  return reduce(0, contributions.size());
}

double first_variation(const ImmersionMap& map, const BumpFunction& f, double h) {
  if (!(h >= 1e-5 && h <= 1e-2))
    throw Error(ErrorKind::BadParameter, "first_variation step must be in [1e-5, 1e-2]");
  const Rect support{f.x0 - f.radius, f.x0 + f.radius, f.y0 - f.radius, f.y0 + f.radius};
  const auto rate = [&](double step) {
    const double ap = area(hamiltonian_deform(map, f, step), support);
    const double am = area(hamiltonian_deform(map, f, -step), support);
    return (ap - am) / (2.0 * step);
  };
  const double coarse = rate(h);
  const double fine = rate(h / 2.0);
  return (4.0 * fine - coarse) / 3.0;
}

std::vector<BumpFunction> seeded_bumps(const ImmersionMap& map, int count,
                                       std::uint64_t seed) {
  if (count < 1) throw Error(ErrorKind::BadParameter, "bump count must be positive");
  std::mt19937_64 rng(seed);
  // Platform-stable uniforms: top 53 bits of the generator output.
  auto uniform = [&rng]() { return double(rng() >> 11) * 0x1.0p-53; };
  const Rect d = map.domain;
  const double rho = 0.3 * std::min(d.width(), d.height());
  std::vector<BumpFunction> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    BumpFunction b;
    b.radius = rho;
    b.amplitude = 1.0;
    const double mx = 1.05 * rho;
    b.x0 = d.x0 + mx + uniform() * (d.width() - 2.0 * mx);
    b.y0 = d.y0 + mx + uniform() * (d.height() - 2.0 * mx);
    out.push_back(b);
  }
  return out;
}

}  // namespace hsl
