#pragma once

// Independent first-variation oracle: Hamiltonian stationarity certified
// by differencing area under compactly supported Hamiltonian
// deformations F_t = F + t J dF(grad f). Restricted to the flat ambient,
// where F + t V is well defined without a retraction step.

#include <cstdint>
#include <vector>

#include "hsl/immersion.hpp"

namespace hsl {

struct BumpFunction {
  double x0 = 0.0, y0 = 0.0;
  double radius = 1.0;
  double amplitude = 1.0;

  // s * exp(-1 / (1 - t^2)) for t = |p - p0| / radius < 1, else 0.
  double value(double x, double y) const;
  RJet eval(const RJet& x, const RJet& y) const;
};

// F_t = F + t * i dF(grad f). The deformed map supports one jet order
// less than its base. Errors: support leaving the domain interior ->
// BadParameter; curved ambient -> Unsupported.
ImmersionMap hamiltonian_deform(const ImmersionMap& base, const BumpFunction& f, double t);

// Integral of sqrt(det g) over the region by composite tensor-product
// Gauss-Legendre quadrature (deterministic pairwise summation).
double area(const ImmersionMap& map, const Rect& region, int cells_x = 20, int cells_y = 20,
            int gl_order = 8);

// Central difference of area over the bump's support box at steps h and
// h/2, Richardson-extrapolated. h must lie in [1e-5, 1e-2].
double first_variation(const ImmersionMap& map, const BumpFunction& f, double h = 1e-3);

// Deterministic seeded bump placement inside the map's domain.
std::vector<BumpFunction> seeded_bumps(const ImmersionMap& map, int count,
                                       std::uint64_t seed);

}  // namespace hsl
