#pragma once

// The breve-delta well family and the antisymmetric Delta' box pair:
//
//   breve delta(eps, zeta) = -eps^-2 on |zeta| <= eps, 0 outside
//   Delta'(eps, zeta)      = +eps^-2 on (-eps, 0), -eps^-2 on (0, eps), 0 else
//
// Delta' = breve delta * Theta(zeta) - breve delta * Theta(-zeta) pointwise
// for zeta != 0. The accumulation point is fixed at zeta = 0; shift the
// integrand to use another one.
//
// The operational identity breve delta = -delta/|zeta| + c delta sgn(zeta)
// carries an arbitrary constant c. For continuous f and an even regularised
// delta the sgn term integrates to zero, so no operation depends on c.

#include <cmath>

#include "improper/distint.hpp"

namespace improper {

enum class BreveKind { Breve, DeltaPrimeBox };

template <typename Scalar>
class BreveKernel {
 public:
  BreveKernel(BreveKind kind, Scalar width) : kind_(kind), width_(width) {
    if (!(width > Scalar(0)) || !std::isfinite(width))
      throw DomainError("breve kernel width must be positive and finite");
  }

  BreveKind kind() const { return kind_; }
  Scalar width() const { return width_; }

 private:
  BreveKind kind_;
  Scalar width_;
};

using BreveKerneld = BreveKernel<double>;

/// Exact piecewise value; Delta'(eps, 0) is 0.
template <typename Scalar>
Scalar eval_breve(const BreveKernel<Scalar>& kernel, Scalar zeta) {
  const Scalar eps = kernel.width();
  const Scalar height = Scalar(1) / (eps * eps);
  if (kernel.kind() == BreveKind::Breve)
    return std::abs(zeta) <= eps ? -height : Scalar(0);
  if (zeta < Scalar(0) && zeta > -eps) return height;
  if (zeta > Scalar(0) && zeta < eps) return -height;
  return Scalar(0);
}

enum class BreveWeight {
  None,     ///< int phi breve delta     -> breve phi(0) for phi ~ c|zeta|
  AbsZeta,  ///< int f |zeta| breve delta -> -f(0)
};

std::vector<Sample> breve_samples(const Integrand& f, BreveWeight weight,
                                  const EpsilonSchedule& schedule,
                                  double tol = 1e-14);

/// Divergence (phi(0) != 0 with weight None) is reported through
/// LimitEstimate::diverged, not thrown.
LimitEstimate breve_action(const Integrand& f, BreveWeight weight,
                           const EpsilonSchedule& schedule,
                           double tol = 1e-14);

std::vector<Sample> delta_prime_samples(const Integrand& f,
                                        const EpsilonSchedule& schedule,
                                        double tol = 1e-14);

/// lim int f Delta'(eps, .) = -f'(0).
LimitEstimate delta_prime_action(const Integrand& f,
                                 const EpsilonSchedule& schedule,
                                 double tol = 1e-14);

}  // namespace improper
