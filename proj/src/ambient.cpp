#include "hsl/ambient.hpp"

#include <cmath>
#include <sstream>

namespace hsl {

const AmbientSpace& AmbientSpace::flat_c2() {
  static const AmbientSpace a{SpaceKind::FlatC2, 0.0, 2, {1, 1, 1}};
  return a;
}

const AmbientSpace& AmbientSpace::proj_cp2() {
  static const AmbientSpace a{SpaceKind::ProjCP2, 1.0, 3, {1, 1, 1}};
  return a;
}

const AmbientSpace& AmbientSpace::hyp_ch2() {
  static const AmbientSpace a{SpaceKind::HypCH2, -1.0, 3, {-1, 1, 1}};
  return a;
}

std::string_view AmbientSpace::name() const {
  switch (kind) {
    case SpaceKind::FlatC2: return "C2";
    case SpaceKind::ProjCP2: return "CP2";
    case SpaceKind::HypCH2: return "CH2";
  }
  return "?";
}

HermitianVector::HermitianVector(std::array<std::complex<double>, 3> components, int dim,
                                 std::array<int, 3> signature)
    : c_(components), dim_(dim), signature_(signature) {
  if (dim != 2 && dim != 3)
    throw Error(ErrorKind::ContractViolation, "HermitianVector dimension must be 2 or 3");
}

HermitianVector HermitianVector::euclidean2(std::complex<double> a, std::complex<double> b) {
  return HermitianVector({a, b, 0.0}, 2, {1, 1, 1});
}

HermitianVector HermitianVector::euclidean3(std::complex<double> a, std::complex<double> b,
                                            std::complex<double> c) {
  return HermitianVector({a, b, c}, 3, {1, 1, 1});
}

HermitianVector HermitianVector::lorentz3(std::complex<double> a, std::complex<double> b,
                                          std::complex<double> c) {
  return HermitianVector({a, b, c}, 3, {-1, 1, 1});
}

HermitianVector HermitianVector::times_i() const {
  HermitianVector out = *this;
  for (auto& z : out.c_) z = std::complex<double>(-z.imag(), z.real());
  return out;
}

HermitianVector HermitianVector::scaled(std::complex<double> s) const {
  HermitianVector out = *this;
  for (auto& z : out.c_) z *= s;
  return out;
}

HermitianVector operator+(const HermitianVector& a, const HermitianVector& b) {
  HermitianVector out = a;
  for (int k = 0; k < 3; ++k) out.c_[k] += b.c_[k];
  return out;
}

HermitianVector operator-(const HermitianVector& a, const HermitianVector& b) {
  HermitianVector out = a;
  for (int k = 0; k < 3; ++k) out.c_[k] -= b.c_[k];
  return out;
}

static void require_same_signature(const HermitianVector& u, const HermitianVector& v) {
  if (u.dim() != v.dim() || u.signature() != v.signature())
    throw Error(ErrorKind::ContractViolation, "Hermitian pairing of mismatched signatures");
}

std::complex<double> herm(const HermitianVector& u, const HermitianVector& v) {
  require_same_signature(u, v);
  std::complex<double> acc = 0.0;
  for (int k = 0; k < u.dim(); ++k)
    acc += double(u.signature()[k]) * u[k] * std::conj(v[k]);
  return acc;
}

double real_inner(const HermitianVector& u, const HermitianVector& v) {
  return herm(u, v).real();
}

double symplectic_form(const HermitianVector& u, const HermitianVector& v) {
  return herm(u.times_i(), v).real();
}

FrameDecomposition::BlockCoefficients FrameDecomposition::project(
    const HermitianVector& v) const {
  BlockCoefficients out;
  const double sigma = ambient.lift_target();
  if (ambient.lifted()) {
    // radial and vertical blocks have signed square norm sigma
    out.radial = real_inner(v, radial) / sigma;
    out.vertical = real_inner(v, vertical) / sigma;
  }
  const double inv11 = gram[1][1] / det_gram;
  const double inv12 = -gram[0][1] / det_gram;
  const double inv22 = gram[0][0] / det_gram;
  const double pt0 = real_inner(v, tangent[0]), pt1 = real_inner(v, tangent[1]);
  out.tangent[0] = inv11 * pt0 + inv12 * pt1;
  out.tangent[1] = inv12 * pt0 + inv22 * pt1;
  const double pn0 = real_inner(v, normal[0]), pn1 = real_inner(v, normal[1]);
  out.normal[0] = inv11 * pn0 + inv12 * pn1;
  out.normal[1] = inv12 * pn0 + inv22 * pn1;
  return out;
}

double FrameDecomposition::max_cross_block_pairing() const {
  double worst = 0.0;
  auto upd = [&](const HermitianVector& a, const HermitianVector& b) {
    worst = std::max(worst, std::abs(real_inner(a, b)));
  };
  for (int i = 0; i < 2; ++i) {
    if (ambient.lifted()) {
      upd(tangent[i], radial);
      upd(tangent[i], vertical);
      upd(normal[i], radial);
      upd(normal[i], vertical);
    }
    for (int j = 0; j < 2; ++j) upd(tangent[i], normal[j]);
  }
  if (ambient.lifted()) upd(radial, vertical);
  return worst;
}

FrameDecomposition lift_frame(const AmbientSpace& ambient, const HermitianVector& z,
                              const std::array<HermitianVector, 2>& tangents) {
  if (!ambient.lifted())
    throw Error(ErrorKind::Unsupported, "lift_frame applies to lifted ambients only");
  const double target = ambient.lift_target();
  const double residual = std::abs(herm(z, z).real() - target);
  if (residual > kLiftConstraintTol) {
    std::ostringstream msg;
    msg << "lift constraint violated: |herm(z,z) - (" << target << ")| = " << residual;
    throw Error(ErrorKind::BadLift, msg.str());
  }

  FrameDecomposition f{ambient,
                       z,
                       z.times_i(),
                       {tangents[0], tangents[1]},
                       {tangents[0].times_i(), tangents[1].times_i()},
                       {},
                       0.0};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) f.gram[i][j] = real_inner(tangents[i], tangents[j]);
  f.det_gram = f.gram[0][0] * f.gram[1][1] - f.gram[0][1] * f.gram[1][0];
  if (!(f.det_gram > kDegenerateGramTol))
    throw Error(ErrorKind::DegenerateImmersion, "tangent block is degenerate");
  return f;
}

}  // namespace hsl
