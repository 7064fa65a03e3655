#pragma once

// One-dimensional Schroedinger problems, hbar = m = 1:
//
//   H = -1/2 d^2/dzeta^2 + V(zeta)
//
// A point interaction -g delta(zeta) imposes psi'(0+) - psi'(0-) = -2 g psi(0),
// so its bound state sits at E = -g^2/2 and it transmits T = k^2/(k^2 + g^2).
//
// Piecewise-constant potentials are propagated with 2x2 transfer matrices
// acting on (psi, psi'); sampled potentials live on uniform grids and are
// handled with finite differences.

#include <complex>
#include <span>
#include <type_traits>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "improper/distint.hpp"

namespace improper {

template <typename Scalar>
using TransferMatrix = Eigen::Matrix<Scalar, 2, 2>;

/// Ordered constant segments. values[0] and values.back() are the flat
/// asymptotic levels on (-inf, b_0) and (b_last, inf).
class PiecewisePotential {
 public:
  PiecewisePotential() : values_{0.0} {}
  PiecewisePotential(std::vector<double> breakpoints,
                     std::vector<double> values);

  std::span<const double> breakpoints() const { return breakpoints_; }
  std::span<const double> values() const { return values_; }
  std::size_t segments() const { return values_.size(); }
  double left_asymptote() const { return values_.front(); }
  double right_asymptote() const { return values_.back(); }
  double min_value() const;

  /// Value at zeta; on a breakpoint the mean of the adjacent segments.
  double operator()(double zeta) const;

  /// V(-zeta).
  PiecewisePotential mirrored() const;

 private:
  std::vector<double> breakpoints_;
  std::vector<double> values_;
};

enum class Boundary { Dirichlet, Periodic };

/// Potential sampled on the uniform grid zeta_i = start + i * step.
class GridPotential {
 public:
  GridPotential(double start, double step, Eigen::VectorXd values,
                Boundary boundary);

  double start() const { return start_; }
  double step() const { return step_; }
  Eigen::Index size() const { return values_.size(); }
  double zeta(Eigen::Index i) const { return start_ + step_ * double(i); }
  Eigen::VectorXd points() const;
  const Eigen::VectorXd& values() const { return values_; }
  Boundary boundary() const { return boundary_; }

 private:
  double start_;
  double step_;
  Eigen::VectorXd values_;
  Boundary boundary_;
};

// ---------------------------------------------------------------- builders

struct DeltaWellBox {
  double g;
  double epsilon;
};
struct DeltaPrimePair {
  double c;
  double epsilon;
};
struct CombCell {
  double g;
  double period;
  double epsilon;
};
/// Scarf cell V0 / sin^2(zeta) on the periodic grid [-pi/2, pi/2) with the
/// singular core |zeta| <= eps replaced by a breve-delta well.
struct ScarfRegularized {
  double v0;
  double epsilon;
  int points;
};

using PotentialSpec =
    std::variant<DeltaWellBox, DeltaPrimePair, CombCell, ScarfRegularized>;
using BuiltPotential = std::variant<PiecewisePotential, GridPotential>;

/// -g/(2 eps) on [-eps, eps]: the unit-mass box scaled by -g.
PiecewisePotential delta_well_box(double g, double epsilon);
/// +c/eps^2 on (-eps, 0), -c/eps^2 on (0, eps).
PiecewisePotential delta_prime_pair(double c, double epsilon);
/// One period [-a/2, a/2] with a centred delta_well_box; requires eps < a/4.
PiecewisePotential comb_cell(double g, double period, double epsilon);

/// Breve-delta strength alpha(eps) = -V0 eps^2 / sin^2(eps); the core value
/// alpha * (-eps^-2) then equals V0 / sin^2(eps), continuous at |zeta| = eps.
double scarf_core_strength(double v0, double epsilon);
GridPotential scarf_regularized(double v0, double epsilon, int points);

BuiltPotential build_potential(const PotentialSpec& spec);

/// Sample a piecewise potential on a uniform grid.
GridPotential sample(const PiecewisePotential& potential, double start,
                     double step, Eigen::Index count, Boundary boundary);

// ------------------------------------------------------- transfer matrices

namespace detail {
template <typename T>
struct is_complex : std::false_type {};
template <typename T>
struct is_complex<std::complex<T>> : std::true_type {};
}  // namespace detail

/// Propagator of (psi, psi') across a constant segment of the given width.
/// Unimodular for every energy.
template <typename Scalar>
TransferMatrix<Scalar> segment_propagator(double value, double energy,
                                          double width) {
  TransferMatrix<Scalar> m;
  const double k2 = 2.0 * (energy - value);
  if (k2 == 0.0) {
    m << Scalar(1), Scalar(width), Scalar(0), Scalar(1);
    return m;
  }
  if constexpr (detail::is_complex<Scalar>::value) {
    const Scalar k = std::sqrt(Scalar(k2));
    const Scalar c = std::cos(k * width);
    const Scalar s = std::sin(k * width);
    m << c, s / k, -k * s, c;
  } else if (k2 > 0.0) {
    const Scalar k = std::sqrt(Scalar(k2));
    const Scalar c = std::cos(k * width);
    const Scalar s = std::sin(k * width);
    m << c, s / k, -k * s, c;
  } else {
    const Scalar q = std::sqrt(Scalar(-k2));
    const Scalar c = std::cosh(q * width);
    const Scalar s = std::sinh(q * width);
    m << c, s / q, q * s, c;
  }
  return m;
}

/// Map from (psi, psi') at the first breakpoint to the last one. The default
/// scalar is complex; bound-state and band code uses the real instantiation.
template <typename Scalar = std::complex<double>>
TransferMatrix<Scalar> transfer_matrix(const PiecewisePotential& potential,
                                       double energy) {
  TransferMatrix<Scalar> m = TransferMatrix<Scalar>::Identity();
  const auto b = potential.breakpoints();
  const auto v = potential.values();
  for (std::size_t i = 0; i + 1 < b.size(); ++i) {
    const double width = b[i + 1] - b[i];
    if (width == 0.0) continue;
    m = segment_propagator<Scalar>(v[i + 1], energy, width) * m;
  }
  return m;
}

// ------------------------------------------------------------ spectra etc.

struct EnergyWindow {
  double lo;
  double hi;
};

/// Bound-state energies in the window (hi <= 0, zero asymptotes), from sign
/// changes of the decaying-solution matching function on a uniform scan,
/// refined by bisection to `tol`.
std::vector<double> bound_states(const PiecewisePotential& potential,
                                 EnergyWindow window, double tol = 1e-10,
                                 int scan_points = 2000);

struct ScatteringResult {
  double energy;
  std::complex<double> t;
  std::complex<double> r;
  double transmission;  // |t|^2
  double reflection;    // |r|^2
};

/// Left-incidence plane-wave amplitudes at k = sqrt(2E). Throws
/// ConsistencyError when |T + R - 1| exceeds 1e-8.
ScatteringResult scattering(const PiecewisePotential& potential,
                            double energy);

struct BandPoint {
  double energy;
  double bloch_rhs;  // 1/2 trace of the cell transfer matrix
  bool allowed;      // |bloch_rhs| <= 1
};

BandPoint comb_dispersion(double g, double period, double energy,
                          double epsilon);

/// Closed zero-width dispersion cos(ka) - (g/k) sin(ka).
double comb_dispersion_limit(double g, double period, double energy);

std::vector<BandPoint> band_scan(double g, double period, double epsilon,
                                 EnergyWindow window, int points);

// ------------------------------------------------------------ grid methods

struct GroundState {
  double energy;
  Eigen::VectorXd psi;  // positive, unit 2-norm
};

/// Lowest eigenpair of the finite-difference Hamiltonian on the grid
/// (Dirichlet: psi = 0 one step beyond each end).
GroundState ground_state(const GridPotential& potential);

/// Partner potential V1 = V - (ln psi0)'' by centred second differences.
/// Dirichlet grids lose their end points. E0 drops out of the potential
/// difference and is only validated.
GridPotential darboux_transform(const GridPotential& potential,
                                const Eigen::Ref<const Eigen::VectorXd>& psi0,
                                double e0);

/// exp(-g rho(zeta)) with rho the box-smoothed |zeta| (rho'' = 1/eps on the
/// core), sampled on the grid of `like`.
Eigen::VectorXd smoothed_delta_ground_state(double g, double epsilon,
                                            const GridPotential& like);

/// Trapezoidal integral of the grid values over |zeta| <= half_width.
double core_integral(const GridPotential& potential, double half_width);

struct CommutationSample {
  double epsilon;
  double deviation;        // sup |A - B| on |zeta| > 2 eps
  double fixed_deviation;  // sup |A - B| on |zeta| > max(2 eps, fixed_region)
  double ground_energy;    // of the regularised potential
};

struct CommutationGrid {
  int points = 4096;
  double fixed_region = 0.5;
};

/// Compare darboux(regularise(V)) with regularise(darboux(V)) for the Scarf
/// cell V0 / sin^2. Widths whose ground state cannot be found are skipped;
/// at least three must survive.
std::vector<CommutationSample> darboux_commutation_check(
    double v0, const EpsilonSchedule& schedule, const CommutationGrid& grid = {});

}  // namespace improper
