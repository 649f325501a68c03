#include "hsl/immersion.hpp"

#include <cmath>
#include <sstream>
#include <vector>

namespace hsl {

std::array<CJet, 3> eval_jet(const ImmersionMap& map, double x, double y, int order) {
  if (order < 0 || order > map.max_order || order > kMaxJetOrder) {
    std::ostringstream msg;
    msg << "jet order " << order << " not supported by this map (max " << map.max_order << ")";
    throw Error(ErrorKind::Unsupported, msg.str());
  }
  if (!map.periodic[0] && !map.domain.contains_x(x))
    throw Error(ErrorKind::OutOfDomain, "x outside the non-periodic domain axis");
  if (!map.periodic[1] && !map.domain.contains_y(y))
    throw Error(ErrorKind::OutOfDomain, "y outside the non-periodic domain axis");
  return map.eval(RJet::variable(order, x, 0), RJet::variable(order, y, 1));
}

namespace {

struct Stencil {
  std::vector<int> offsets;
  std::vector<double> weights;  // divide by h^k afterwards
  int power;
};

// Centered O(h^2) stencils for the 1st..3rd derivative.
const Stencil& stencil_1d(int k) {
  static const Stencil s1{{-1, 1}, {-0.5, 0.5}, 1};
  static const Stencil s2{{-1, 0, 1}, {1.0, -2.0, 1.0}, 2};
  static const Stencil s3{{-2, -1, 1, 2}, {-0.5, 1.0, -1.0, 0.5}, 3};
  switch (k) {
    case 1: return s1;
    case 2: return s2;
    default: return s3;
  }
}

std::array<std::complex<double>, 3> value_at(const ImmersionMap& map, double x, double y) {
  const auto jets = eval_jet(map, x, y, 0);
  return {jets[0].value(), jets[1].value(), jets[2].value()};
}

// Tensor-product finite difference for d^{a+b} / dx^a dy^b at step h.
std::array<std::complex<double>, 3> fd_partial(const ImmersionMap& map, double x, double y,
                                               int a, int b, double h) {
  std::array<std::complex<double>, 3> acc{};
  const double scale = 1.0 / std::pow(h, a + b);
  if (a == 0) {
    const Stencil& sy = stencil_1d(b);
    for (size_t j = 0; j < sy.offsets.size(); ++j) {
      const auto v = value_at(map, x, y + sy.offsets[j] * h);
      for (int k = 0; k < 3; ++k) acc[k] += sy.weights[j] * v[k];
    }
  } else if (b == 0) {
    const Stencil& sx = stencil_1d(a);
    for (size_t i = 0; i < sx.offsets.size(); ++i) {
      const auto v = value_at(map, x + sx.offsets[i] * h, y);
      for (int k = 0; k < 3; ++k) acc[k] += sx.weights[i] * v[k];
    }
  } else {
    const Stencil& sx = stencil_1d(a);
    const Stencil& sy = stencil_1d(b);
    for (size_t i = 0; i < sx.offsets.size(); ++i)
      for (size_t j = 0; j < sy.offsets.size(); ++j) {
        const auto v = value_at(map, x + sx.offsets[i] * h, y + sy.offsets[j] * h);
        const double w = sx.weights[i] * sy.weights[j];
        for (int k = 0; k < 3; ++k) acc[k] += w * v[k];
      }
  }
  for (int k = 0; k < 3; ++k) acc[k] *= scale;
  return acc;
}

}  // namespace

double fd_crosscheck(const ImmersionMap& map, double x, double y, int order, double h) {
  if (!(h >= 1e-6 && h <= 1e-2))
    throw Error(ErrorKind::BadParameter, "fd_crosscheck step must be in [1e-6, 1e-2]");
  if (order < 1 || order > kMaxJetOrder)
    throw Error(ErrorKind::Unsupported, "fd_crosscheck order must be in [1, 3]");
  // The widest stencil reaches 2h either side at step h.
  const double reach = 2.0 * h;
  if (!map.periodic[0] && !(x - reach >= map.domain.x0 && x + reach <= map.domain.x1))
    throw Error(ErrorKind::OutOfDomain, "fd stencil leaves the non-periodic x axis");
  if (!map.periodic[1] && !(y - reach >= map.domain.y0 && y + reach <= map.domain.y1))
    throw Error(ErrorKind::OutOfDomain, "fd stencil leaves the non-periodic y axis");

  const auto jets = eval_jet(map, x, y, order);
  double worst = 0.0;
  for (int a = 0; a <= order; ++a) {
    for (int b = 0; a + b <= order; ++b) {
      if (a + b < 1) continue;
      const auto coarse = fd_partial(map, x, y, a, b, h);
      const auto fine = fd_partial(map, x, y, a, b, h / 2.0);
      for (int k = 0; k < map.ambient.lift_dim; ++k) {
        // O(h^2) stencils: eliminate the leading error term.
        const std::complex<double> richardson = (4.0 * fine[k] - coarse[k]) / 3.0;
        worst = std::max(worst, std::abs(jets[k].partial(a, b) - richardson));
      }
    }
  }
  return worst;
}

}  // namespace hsl
