#pragma once

// Nascent delta families delta(eps, zeta): Gaussian, box, Lorentzian and the
// Fourier (Dirichlet/sinc) kernel, with analytic derivatives, partial masses
// and the smoothed Heaviside step.
//
// Every routine is templated on the scalar type so the same code serves
// float, double and long double evaluations; `DeltaKerneld` is the alias
// used throughout the rest of the library.

#include <cmath>
#include <complex>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <string>

#include <Eigen/Core>

#include "improper/errors.hpp"

namespace improper {

enum class KernelKind { Gaussian, Box, Lorentzian, Sinc };

inline constexpr int kMaxDerivativeOrder = 4;

inline const char* to_string(KernelKind kind) {
  switch (kind) {
    case KernelKind::Gaussian: return "gaussian";
    case KernelKind::Box: return "box";
    case KernelKind::Lorentzian: return "lorentzian";
    case KernelKind::Sinc: return "sinc";
  }
  return "?";
}

/// A member of a delta sequence: family plus width eps > 0.
/// For the sinc family the width is the inverse cutoff 1/K.
template <typename Scalar>
class DeltaKernel {
 public:
  DeltaKernel(KernelKind kind, Scalar width) : kind_(kind), width_(width) {
    if (!(width > Scalar(0)) || !std::isfinite(width))
      throw DomainError("kernel width must be positive and finite");
  }

  KernelKind kind() const { return kind_; }
  Scalar width() const { return width_; }
  Scalar cutoff() const { return Scalar(1) / width_; }

 private:
  KernelKind kind_;
  Scalar width_;
};

using DeltaKerneld = DeltaKernel<double>;

/// Sine integral Si(x) = int_0^x sin(t)/t dt.
template <typename Scalar>
Scalar sine_integral(Scalar x) {
  using std::abs;
  if (std::isinf(x)) return std::copysign(std::numbers::pi_v<Scalar> / 2, x);
  const Scalar t = abs(x);
  const Scalar eps = std::numeric_limits<Scalar>::epsilon();
  Scalar si;
  if (t <= Scalar(2)) {
    // alternating power series
    Scalar term = t;
    si = t;
    for (int k = 1; k < 60; ++k) {
      term *= -t * t / (Scalar(2 * k) * Scalar(2 * k + 1));
      const Scalar add = term / Scalar(2 * k + 1);
      si += add;
      if (abs(add) < eps * abs(si)) break;
    }
  } else {
    // continued fraction for E1(i t), modified Lentz
    using C = std::complex<Scalar>;
    const Scalar tiny = std::numeric_limits<Scalar>::min() / eps;
    C b(1, t);
    C c(1 / tiny, 0);
    C d = C(1, 0) / b;
    C h = d;
    for (int i = 2; i < 200; ++i) {
      const Scalar a = -Scalar(i - 1) * Scalar(i - 1);
      b += Scalar(2);
      d = C(1, 0) / (a * d + b);
      c = b + a / c;
      const C del = c * d;
      h *= del;
      if (abs(del.real() - 1) + abs(del.imag()) < eps) break;
    }
    h *= C(std::cos(t), -std::sin(t));
    si = std::numbers::pi_v<Scalar> / 2 + h.imag();
  }
  return x < 0 ? -si : si;
}

namespace detail {

inline void check_order(KernelKind kind, int order) {
  if (order < 0 || order > kMaxDerivativeOrder)
    throw UnsupportedDerivative("derivative order must lie in [0, " +
                                std::to_string(kMaxDerivativeOrder) + "]");
  if (kind == KernelKind::Box && order != 0)
    throw UnsupportedDerivative("box kernel has no classical derivative");
}

// n-th derivative of sin(x)/x.
template <typename Scalar>
Scalar sinc_derivative(Scalar x, int n) {
  if (std::abs(x) < Scalar(2)) {
    // termwise derivative of sum_m (-1)^m x^(2m) / (2m+1)!
    Scalar sum = 0;
    Scalar inv_fact = 1;  // 1/(2m+1)!
    for (int m = 0; m < 30; ++m) {
      if (m > 0) inv_fact /= Scalar(2 * m) * Scalar(2 * m + 1);
      const int p = 2 * m;
      if (p < n) continue;
      Scalar falling = 1;
      for (int j = 0; j < n; ++j) falling *= Scalar(p - j);
      const Scalar sign = (m % 2 == 0) ? 1 : -1;
      sum += sign * falling * inv_fact * std::pow(x, p - n);
    }
    return sum;
  }
  // Leibniz rule on sin(x) * x^-1
  const Scalar s = std::sin(x);
  const Scalar c = std::cos(x);
  auto sin_deriv = [&](int m) -> Scalar {
    switch (m % 4) {
      case 0: return s;
      case 1: return c;
      case 2: return -s;
      default: return -c;
    }
  };
  Scalar sum = 0;
  Scalar binom = 1;
  Scalar fact = 1;
  for (int j = 0; j <= n; ++j) {
    if (j > 0) {
      binom = binom * Scalar(n - j + 1) / Scalar(j);
      fact *= Scalar(j);
    }
    const Scalar sign = (j % 2 == 0) ? 1 : -1;
    sum += binom * sin_deriv(n - j) * sign * fact / std::pow(x, j + 1);
  }
  return sum;
}

// n-th derivative of 1/(1+x^2).
template <typename Scalar>
Scalar lorentz_derivative(Scalar x, int n) {
  const Scalar u = 1 + x * x;
  switch (n) {
    case 0: return 1 / u;
    case 1: return -2 * x / (u * u);
    case 2: return (6 * x * x - 2) / (u * u * u);
    case 3: return 24 * x * (1 - x * x) / (u * u * u * u);
    default: {
      const Scalar x2 = x * x;
      return 24 * (5 * x2 * x2 - 10 * x2 + 1) / (u * u * u * u * u);
    }
  }
}

}  // namespace detail

/// order-th zeta-derivative of the kernel density at zeta.
template <typename Scalar>
Scalar eval_kernel(const DeltaKernel<Scalar>& kernel, Scalar zeta,
                   int order = 0) {
  detail::check_order(kernel.kind(), order);
  const Scalar eps = kernel.width();
  const Scalar pi = std::numbers::pi_v<Scalar>;
  switch (kernel.kind()) {
    case KernelKind::Gaussian: {
      const Scalar x = zeta / eps;
      const Scalar g =
          std::exp(-x * x / 2) / (eps * std::sqrt(2 * pi));
      // probabilists' Hermite polynomials: d^n/dx^n e^{-x^2/2} = (-1)^n He_n e^{-x^2/2}
      Scalar he_prev = 1;
      Scalar he = x;
      Scalar hermite = 1;
      if (order == 1) hermite = x;
      for (int n = 1; n < order; ++n) {
        const Scalar next = x * he - Scalar(n) * he_prev;
        he_prev = he;
        he = next;
        hermite = he;
      }
      const Scalar sign = (order % 2 == 0) ? 1 : -1;
      return sign * hermite * g / std::pow(eps, order);
    }
    case KernelKind::Box:
      return std::abs(zeta) <= eps ? Scalar(1) / (2 * eps) : Scalar(0);
    case KernelKind::Lorentzian:
      if (order == 0) return eps / (pi * (zeta * zeta + eps * eps));
      return detail::lorentz_derivative(zeta / eps, order) /
             (pi * std::pow(eps, order + 1));
    case KernelKind::Sinc: {
      const Scalar k = kernel.cutoff();
      return std::pow(k, order + 1) / pi *
             detail::sinc_derivative(k * zeta, order);
    }
  }
  return 0;
}

/// Vectorised evaluation over an Eigen array of abscissae.
template <typename Derived>
Eigen::Array<typename Derived::Scalar, Eigen::Dynamic, 1> eval_kernel(
    const DeltaKernel<typename Derived::Scalar>& kernel,
    const Eigen::ArrayBase<Derived>& zeta, int order = 0) {
  using Scalar = typename Derived::Scalar;
  detail::check_order(kernel.kind(), order);
  return zeta.derived().unaryExpr(
      [&](Scalar z) { return eval_kernel(kernel, z, order); });
}

/// int_a^b kernel(zeta) dzeta in closed form. Infinite endpoints are allowed
/// except for the sinc family, whose tail is only conditionally convergent.
template <typename Scalar>
Scalar kernel_mass(const DeltaKernel<Scalar>& kernel, Scalar a, Scalar b) {
  if (std::isnan(a) || std::isnan(b) || !(a < b))
    throw DomainError("kernel_mass requires a < b");
  const Scalar eps = kernel.width();
  const Scalar pi = std::numbers::pi_v<Scalar>;
  switch (kernel.kind()) {
    case KernelKind::Gaussian: {
      const Scalar s = eps * std::sqrt(Scalar(2));
      if (a >= 0) return (std::erfc(a / s) - std::erfc(b / s)) / 2;
      if (b <= 0) return (std::erfc(-b / s) - std::erfc(-a / s)) / 2;
      return 1 - std::erfc(-a / s) / 2 - std::erfc(b / s) / 2;
    }
    case KernelKind::Box: {
      const Scalar lo = std::max(a, -eps);
      const Scalar hi = std::min(b, eps);
      return hi > lo ? (hi - lo) / (2 * eps) : Scalar(0);
    }
    case KernelKind::Lorentzian:
      return (std::atan(b / eps) - std::atan(a / eps)) / pi;
    case KernelKind::Sinc: {
      if (!std::isfinite(a) || !std::isfinite(b))
        throw DomainError(
            "sinc kernel mass needs finite endpoints (conditionally "
            "convergent tail)");
      const Scalar k = kernel.cutoff();
      return (sine_integral(k * b) - sine_integral(k * a)) / pi;
    }
  }
  return 0;
}

/// Gaussian-smoothed step: Theta(eps, zeta) = int_{-inf}^zeta delta(eps, t) dt.
template <typename Scalar>
Scalar heaviside_smooth(Scalar epsilon, Scalar zeta) {
  if (!(epsilon > Scalar(0)) || !std::isfinite(epsilon))
    throw DomainError("heaviside_smooth requires epsilon > 0");
  return std::erfc(-zeta / (epsilon * std::sqrt(Scalar(2)))) / 2;
}

}  // namespace improper
