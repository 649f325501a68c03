#pragma once

// Parametrized immersions into the lift spaces, evaluated in jet
// arithmetic. eval_jet produces exact partials up to order 3;
// fd_crosscheck is the independent finite-difference oracle used by the
// test suite.

#include <array>
#include <functional>

#include "hsl/ambient.hpp"
#include "hsl/jets.hpp"

namespace hsl {

struct Rect {
  double x0 = 0.0, x1 = 0.0, y0 = 0.0, y1 = 0.0;
  double width() const { return x1 - x0; }
  double height() const { return y1 - y0; }
  bool contains_x(double x) const { return x >= x0 && x <= x1; }
  bool contains_y(double y) const { return y >= y0 && y <= y1; }
};

struct ImmersionMap {
  AmbientSpace ambient;
  Rect domain;
  std::array<bool, 2> periodic{false, false};
  int max_order = kMaxJetOrder;
  // Components beyond ambient.lift_dim must be zero jets.
  std::function<std::array<CJet, 3>(const RJet&, const RJet&)> eval;
};

// Jets of all components at (x, y). Errors: order above the supported
// maximum -> Unsupported; point outside the domain along a non-periodic
// axis -> OutOfDomain (periodic axes evaluate anywhere).
std::array<CJet, 3> eval_jet(const ImmersionMap& map, double x, double y, int order);

// Max absolute deviation between jet partials (all components, all
// mixed partials up to `order`) and central finite differences with
// Richardson extrapolation at steps h and h/2. Test-side oracle only.
double fd_crosscheck(const ImmersionMap& map, double x, double y, int order, double h);

}  // namespace hsl
