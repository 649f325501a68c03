#pragma once

// Truncated bivariate Taylor arithmetic ("jets") in two real variables,
// up to total degree 3. A jet stores the Taylor coefficients of a scalar
// function at a point; arithmetic and the elementary functions needed by
// the immersion catalog (exp, sin, cos, sinh, cosh, sqrt, reciprocal)
// propagate them exactly, so partial derivatives up to the truncation
// order come out with no discretization error.

#include <array>
#include <cmath>
#include <complex>

#include "hsl/errors.hpp"

namespace hsl {

inline constexpr int kMaxJetOrder = 3;
inline constexpr int kJetTerms = 10;

namespace jet_detail {

// Degree-graded monomial layout: 1, x, y, x^2, xy, y^2, x^3, x^2 y, x y^2, y^3.
inline constexpr std::array<int, kJetTerms> kExpX{0, 1, 0, 2, 1, 0, 3, 2, 1, 0};
inline constexpr std::array<int, kJetTerms> kExpY{0, 0, 1, 0, 1, 2, 0, 1, 2, 3};

constexpr int term_index(int a, int b) {
  constexpr int base[kMaxJetOrder + 1] = {0, 1, 3, 6};
  return base[a + b] + b;
}

constexpr int term_count(int order) { return (order + 1) * (order + 2) / 2; }

constexpr std::array<std::array<int, kJetTerms>, kJetTerms> make_product_table() {
  std::array<std::array<int, kJetTerms>, kJetTerms> t{};
  for (int i = 0; i < kJetTerms; ++i) {
    for (int j = 0; j < kJetTerms; ++j) {
      const int a = kExpX[i] + kExpX[j];
      const int b = kExpY[i] + kExpY[j];
      t[i][j] = (a + b <= kMaxJetOrder) ? term_index(a, b) : -1;
    }
  }
  return t;
}

inline constexpr auto kProductTable = make_product_table();
inline constexpr std::array<double, kMaxJetOrder + 1> kFactorial{1.0, 1.0, 2.0, 6.0};

}  // namespace jet_detail

template <typename T>
class Jet {
 public:
  Jet() : order_(0) {}
  explicit Jet(int order, T constant = T{}) : order_(checked(order)) { c_[0] = constant; }

  // Coordinate seed: value plus unit linear coefficient along `axis` (0 = x, 1 = y).
  static Jet variable(int order, T value, int axis) {
    if (axis != 0 && axis != 1)
      throw Error(ErrorKind::ContractViolation, "jet axis must be 0 or 1");
    Jet j(order, value);
    if (order >= 1) j.c_[axis == 0 ? 1 : 2] = T(1);
    return j;
  }

  int order() const { return order_; }
  int terms() const { return jet_detail::term_count(order_); }
  T value() const { return c_[0]; }

  T coeff(int a, int b) const {
    require_degree(a, b);
    return c_[jet_detail::term_index(a, b)];
  }

  // Derivative value d^{a+b} f / dx^a dy^b at the expansion point.
  T partial(int a, int b) const {
    require_degree(a, b);
    return c_[jet_detail::term_index(a, b)] *
           (jet_detail::kFactorial[a] * jet_detail::kFactorial[b]);
  }

  // Jet of the first partial along `axis`, truncated one order lower.
  Jet derivative(int axis) const {
    if (axis != 0 && axis != 1)
      throw Error(ErrorKind::ContractViolation, "jet axis must be 0 or 1");
    Jet out(order_ > 0 ? order_ - 1 : 0);
    for (int i = 0; i < out.terms(); ++i) {
      const int a = jet_detail::kExpX[i];
      const int b = jet_detail::kExpY[i];
      if (axis == 0)
        out.c_[i] = c_[jet_detail::term_index(a + 1, b)] * T(a + 1);
      else
        out.c_[i] = c_[jet_detail::term_index(a, b + 1)] * T(b + 1);
    }
    return out;
  }

  std::array<T, kJetTerms>& raw() { return c_; }
  const std::array<T, kJetTerms>& raw() const { return c_; }

  Jet& operator+=(const Jet& o) { return *this = *this + o; }
  Jet& operator-=(const Jet& o) { return *this = *this - o; }
  Jet& operator*=(const Jet& o) { return *this = *this * o; }

  friend Jet operator+(const Jet& a, const Jet& b) {
    Jet out(std::min(a.order_, b.order_));
    for (int i = 0; i < out.terms(); ++i) out.c_[i] = a.c_[i] + b.c_[i];
    return out;
  }
  friend Jet operator-(const Jet& a, const Jet& b) {
    Jet out(std::min(a.order_, b.order_));
    for (int i = 0; i < out.terms(); ++i) out.c_[i] = a.c_[i] - b.c_[i];
    return out;
  }
  friend Jet operator-(const Jet& a) {
    Jet out(a.order_);
    for (int i = 0; i < out.terms(); ++i) out.c_[i] = -a.c_[i];
    return out;
  }
  friend Jet operator*(const Jet& a, const Jet& b) {
    Jet out(std::min(a.order_, b.order_));
    const int n = out.terms();
    for (int i = 0; i < a.terms(); ++i) {
      if (a.c_[i] == T{}) continue;
      for (int j = 0; j < b.terms(); ++j) {
        const int k = jet_detail::kProductTable[i][j];
        if (k >= 0 && k < n) out.c_[k] += a.c_[i] * b.c_[j];
      }
    }
    return out;
  }

  template <typename S>
  friend Jet operator*(const Jet& a, const S& s) {
    Jet out(a.order_);
    for (int i = 0; i < out.terms(); ++i) out.c_[i] = a.c_[i] * s;
    return out;
  }
  template <typename S>
  friend Jet operator*(const S& s, const Jet& a) { return a * s; }
  template <typename S>
  friend Jet operator+(const Jet& a, const S& s) {
    Jet out = a;
    out.c_[0] += s;
    return out;
  }
  template <typename S>
  friend Jet operator+(const S& s, const Jet& a) { return a + s; }
  template <typename S>
  friend Jet operator-(const Jet& a, const S& s) {
    Jet out = a;
    out.c_[0] -= s;
    return out;
  }
  template <typename S>
  friend Jet operator-(const S& s, const Jet& a) { return (-a) + s; }

 private:
  static int checked(int order) {
    if (order < 0 || order > kMaxJetOrder)
      throw Error(ErrorKind::Unsupported, "jet order must be in [0, 3]");
    return order;
  }
  void require_degree(int a, int b) const {
    if (a < 0 || b < 0 || a + b > order_)
      throw Error(ErrorKind::ContractViolation, "jet coefficient beyond truncation order");
  }

  int order_;
  std::array<T, kJetTerms> c_{};
};

using RJet = Jet<double>;
using CJet = Jet<std::complex<double>>;

namespace jet_detail {

// f(u) = sum_k d[k] * (u - u0)^k with d[k] = f^(k)(u0)/k!; exact at the
// truncation order because (u - u0) is nilpotent.
inline RJet apply_series(const RJet& u, const std::array<double, 4>& d) {
  RJet uhat = u;
  uhat.raw()[0] = 0.0;
  RJet acc(u.order(), d[3]);
  for (int k = 2; k >= 0; --k) acc = acc * uhat + d[k];
  return acc;
}

}  // namespace jet_detail

inline RJet exp(const RJet& u) {
  const double e = std::exp(u.value());
  return jet_detail::apply_series(u, {e, e, e / 2.0, e / 6.0});
}

inline RJet sin(const RJet& u) {
  const double s = std::sin(u.value()), c = std::cos(u.value());
  return jet_detail::apply_series(u, {s, c, -s / 2.0, -c / 6.0});
}

inline RJet cos(const RJet& u) {
  const double s = std::sin(u.value()), c = std::cos(u.value());
  return jet_detail::apply_series(u, {c, -s, -c / 2.0, s / 6.0});
}

inline RJet sinh(const RJet& u) {
  const double s = std::sinh(u.value()), c = std::cosh(u.value());
  return jet_detail::apply_series(u, {s, c, s / 2.0, c / 6.0});
}

inline RJet cosh(const RJet& u) {
  const double s = std::sinh(u.value()), c = std::cosh(u.value());
  return jet_detail::apply_series(u, {c, s, c / 2.0, s / 6.0});
}

inline RJet sqrt(const RJet& u) {
  const double v = u.value();
  if (!(v > 0.0))
    throw Error(ErrorKind::ContractViolation, "jet sqrt requires a positive value part");
  const double r = std::sqrt(v);
  return jet_detail::apply_series(
      u, {r, 0.5 / r, -1.0 / (8.0 * r * v), 1.0 / (16.0 * r * v * v)});
}

inline RJet recip(const RJet& u) {
  const double v = u.value();
  if (v == 0.0)
    throw Error(ErrorKind::ContractViolation, "jet reciprocal of zero value part");
  const double w = 1.0 / v;
  return jet_detail::apply_series(u, {w, -w * w, w * w * w, -w * w * w * w});
}

inline CJet complexify(const RJet& u) {
  CJet out(u.order());
  for (int i = 0; i < u.terms(); ++i) out.raw()[i] = u.raw()[i];
  return out;
}

inline RJet real(const CJet& u) {
  RJet out(u.order());
  for (int i = 0; i < u.terms(); ++i) out.raw()[i] = u.raw()[i].real();
  return out;
}

inline RJet imag(const CJet& u) {
  RJet out(u.order());
  for (int i = 0; i < u.terms(); ++i) out.raw()[i] = u.raw()[i].imag();
  return out;
}

inline CJet conj(const CJet& u) {
  CJet out(u.order());
  for (int i = 0; i < u.terms(); ++i) out.raw()[i] = std::conj(u.raw()[i]);
  return out;
}

inline CJet times_i(const CJet& u) {
  CJet out(u.order());
  for (int i = 0; i < u.terms(); ++i) {
    const auto z = u.raw()[i];
    out.raw()[i] = std::complex<double>(-z.imag(), z.real());
  }
  return out;
}

// e^{i theta} for a real jet theta.
inline CJet cexp_i(const RJet& theta) {
  const RJet c = cos(theta), s = sin(theta);
  CJet out(theta.order());
  for (int i = 0; i < out.terms(); ++i)
    out.raw()[i] = std::complex<double>(c.raw()[i], s.raw()[i]);
  return out;
}

inline CJet operator*(const CJet& a, const RJet& b) { return a * complexify(b); }
inline CJet operator*(const RJet& a, const CJet& b) { return complexify(a) * b; }
inline CJet operator*(const RJet& a, std::complex<double> s) { return complexify(a) * s; }
inline CJet operator*(std::complex<double> s, const RJet& a) { return complexify(a) * s; }
inline CJet operator+(const CJet& a, const RJet& b) { return a + complexify(b); }
inline CJet operator+(const RJet& a, const CJet& b) { return complexify(a) + b; }
inline CJet operator-(const CJet& a, const RJet& b) { return a - complexify(b); }
inline CJet operator-(const RJet& a, const CJet& b) { return complexify(a) - b; }

}  // namespace hsl
