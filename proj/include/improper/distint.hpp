#pragma once

// Distributional integration: quadrature of an integrand against a nascent
// delta at fixed width, the eps -> 0 extrapolator, and the delta, derivative,
// moment and Fourier actions built on them.

#include <functional>
#include <span>
#include <vector>

#include "improper/kernel.hpp"
#include "improper/quadrature.hpp"

namespace improper {

/// Real integrand of one variable. `singular_origin` marks integrands that
/// may not be evaluated at zeta = 0; quadrature then punctures the origin
/// symmetrically by kOriginPuncture.
struct Integrand {
  std::function<double(double)> fn;
  bool singular_origin = false;

  double operator()(double zeta) const { return fn(zeta); }
};

inline constexpr double kOriginPuncture = 1e-12;

struct Window {
  double lo;
  double hi;
};

/// Geometric sequence of widths eps_j = start * ratio^j, j < steps.
class EpsilonSchedule {
 public:
  EpsilonSchedule(double start, double ratio, int steps);

  static EpsilonSchedule defaults() { return {0.4, 0.5, 8}; }

  double start() const { return start_; }
  double ratio() const { return ratio_; }
  int steps() const { return steps_; }
  double largest() const { return start_; }
  std::vector<double> values() const;

 private:
  double start_;
  double ratio_;
  int steps_;
};

struct Sample {
  double epsilon;
  double value;
  double magnitude = 0.0;  // integral of |integrand| when known, else 0
};

/// Extrapolated eps -> 0 value of a power-law model v(eps) = L + C eps^p.
/// When `diverged` is set `value` is NaN and `order` holds the fitted growth
/// exponent (negative for divergent sequences).
struct LimitEstimate {
  double value = 0.0;
  double order = 0.0;
  double residual = 0.0;
  bool diverged = false;
};

/// Fit L + C eps^p through the last three samples (strictly decreasing eps)
/// and eliminate the power-law term. With five or more samples the bias
/// is refined further: a Richardson table in integer orders when the fitted
/// order is an integer and the widths are geometric, otherwise a second
/// elimination over the sliding three-point limits. A refinement is kept only
/// when its change is below the first-stage residual.
LimitEstimate epsilon_limit(std::span<const Sample> samples);

/// Generic weighted integral int_window f(zeta) w(zeta) dzeta. Symmetric
/// windows are folded onto [0, hi] so that odd integrands cancel exactly.
/// `breakpoints` are extra panel boundaries (mirrored when folding).
double integrate_weighted(const Integrand& f,
                          const std::function<double(double)>& weight,
                          Window window, std::vector<double> breakpoints,
                          double tol);

/// As integrate_weighted, also reporting the error estimate and the
/// integral of |f w|.
QuadratureResult integrate_weighted_result(
    const Integrand& f, const std::function<double(double)>& weight,
    Window window, std::vector<double> breakpoints, double tol);

/// int_window f(zeta) d^order/dzeta^order kernel(zeta) dzeta. The window must
/// contain 0; box kernels are clipped to their support and sinc kernels are
/// split at the zeros of sin(K zeta).
double integrate_against(const Integrand& f, const DeltaKerneld& kernel,
                         Window window, double tol, int order = 0);

enum class ActionVariant { Delta, Derivative, Moment, Fourier };

struct ActionKind {
  ActionVariant variant = ActionVariant::Delta;
  int order = 0;  // Derivative only, 1..kMaxDerivativeOrder

  static ActionKind delta() { return {ActionVariant::Delta, 0}; }
  static ActionKind derivative(int n);
  static ActionKind moment() { return {ActionVariant::Moment, 0}; }
  static ActionKind fourier() { return {ActionVariant::Fourier, 0}; }
};

/// Half-width of the fixed window used with the Lorentzian family. Its
/// power-law tails make eps-proportional windows useless for growing f, so
/// the kernel is restricted to [-W, W] and renormalised by its arctangent mass.
inline constexpr double kLorentzianWindow = 1.0;
/// Gaussian windows extend to this many multiples of the largest width.
inline constexpr double kGaussianWindowWidths = 12.0;

/// Window used for the Fourier action: the smallest W >= 1 with K0 W a
/// multiple of 2 pi, so every cutoff K0 / ratio^j of a halving schedule sees
/// the same phase at the window edge.
double fourier_window(double first_cutoff);

/// Per-width values int f * kernel-action over the schedule.
std::vector<Sample> action_samples(const Integrand& f, ActionKind kind,
                                   KernelKind family,
                                   const EpsilonSchedule& schedule,
                                   double tol);

LimitEstimate distribution_action(const Integrand& f, ActionKind kind,
                                  KernelKind family,
                                  const EpsilonSchedule& schedule,
                                  double tol = 1e-13);

}  // namespace improper
