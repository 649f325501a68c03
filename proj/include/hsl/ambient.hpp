#pragma once

// The three ambient space forms and the algebra of their lift spaces:
// flat C^2, the unit sphere S^5 in C^3 over CP^2, and the quadric H^5_1
// in C^3 with signature (-,+,+) over CH^2. Points of the curved ambients
// are handled exclusively through horizontal lifts; the signed Hermitian
// pairing herm(u, v) = sum_k eps_k u_k conj(v_k) carries the real metric
// (its real part) and the symplectic form (Re herm(i u, v)).

#include <array>
#include <complex>
#include <string_view>

#include "hsl/errors.hpp"

namespace hsl {

enum class SpaceKind { FlatC2, ProjCP2, HypCH2 };

// Tolerance for the unit-sphere / quadric constraint on catalog lifts.
// The closed-form families satisfy the constraint identically, so any
// residual above this level indicates a transcription bug.
inline constexpr double kLiftConstraintTol = 1e-10;
// Gram determinant threshold below which an immersion counts as degenerate.
inline constexpr double kDegenerateGramTol = 1e-12;

struct AmbientSpace {
  SpaceKind kind;
  double c;                      // sectional curvature of totally real planes
  int lift_dim;                  // complex dimension of the lift space
  std::array<int, 3> signature;  // +/-1 per complex coordinate

  static const AmbientSpace& flat_c2();
  static const AmbientSpace& proj_cp2();
  static const AmbientSpace& hyp_ch2();

  bool lifted() const { return kind != SpaceKind::FlatC2; }
  // herm(L, L) target on the lift: +1 on S^5, -1 on H^5_1.
  double lift_target() const { return kind == SpaceKind::HypCH2 ? -1.0 : 1.0; }
  std::string_view name() const;
};

class HermitianVector {
 public:
  HermitianVector(std::array<std::complex<double>, 3> components, int dim,
                  std::array<int, 3> signature);

  static HermitianVector euclidean2(std::complex<double> a, std::complex<double> b);
  static HermitianVector euclidean3(std::complex<double> a, std::complex<double> b,
                                    std::complex<double> c);
  static HermitianVector lorentz3(std::complex<double> a, std::complex<double> b,
                                  std::complex<double> c);

  int dim() const { return dim_; }
  const std::array<int, 3>& signature() const { return signature_; }
  std::complex<double> operator[](int k) const { return c_[k]; }

  HermitianVector times_i() const;
  HermitianVector scaled(std::complex<double> s) const;
  friend HermitianVector operator+(const HermitianVector& a, const HermitianVector& b);
  friend HermitianVector operator-(const HermitianVector& a, const HermitianVector& b);

 private:
  std::array<std::complex<double>, 3> c_;
  int dim_;
  std::array<int, 3> signature_;
};

// Signed Hermitian pairing; first slot linear, second conjugated.
std::complex<double> herm(const HermitianVector& u, const HermitianVector& v);

// omega(u, v) = Re herm(i u, v); the real metric is g(u, v) = Re herm(u, v).
double symplectic_form(const HermitianVector& u, const HermitianVector& v);
double real_inner(const HermitianVector& u, const HermitianVector& v);

// Orthogonal splitting of the lift space at a constrained point z into
// radial span{z}, vertical span{iz}, horizontal-tangent span{dL_1, dL_2}
// and horizontal-normal span{i dL_1, i dL_2}. Block projectors use the
// signed pairing; block orthogonality is a monitored property of valid
// lifts, not an assumption the projector enforces.
struct FrameDecomposition {
  AmbientSpace ambient;
  HermitianVector radial, vertical;
  std::array<HermitianVector, 2> tangent;
  std::array<HermitianVector, 2> normal;
  std::array<std::array<double, 2>, 2> gram;  // tangent-block Gram matrix
  double det_gram;

  struct BlockCoefficients {
    double radial = 0.0, vertical = 0.0;
    std::array<double, 2> tangent{};
    std::array<double, 2> normal{};
  };
  BlockCoefficients project(const HermitianVector& v) const;
  // Largest |Re herm| between vectors of distinct blocks; a lift sanity probe.
  double max_cross_block_pairing() const;
};

FrameDecomposition lift_frame(const AmbientSpace& ambient, const HermitianVector& z,
                              const std::array<HermitianVector, 2>& tangents);

}  // namespace hsl
