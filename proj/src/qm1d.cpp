#include "improper/qm1d.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>

#include "improper/errors.hpp"

namespace improper {

namespace {

void require_width(double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps))
    throw DomainError("epsilon must be positive and finite");
}

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw DomainError(std::string(what) + " must be finite");
}

void require_zero_asymptotes(const PiecewisePotential& p) {
  if (p.left_asymptote() != 0.0 || p.right_asymptote() != 0.0)
    throw DomainError("potential must vanish outside its breakpoints");
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

// ------------------------------------------------------------- potentials

PiecewisePotential::PiecewisePotential(std::vector<double> breakpoints,
                                       std::vector<double> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
  if (values_.size() != breakpoints_.size() + 1)
    throw DomainError("need exactly one more value than breakpoints");
  for (double b : breakpoints_) require_finite(b, "breakpoint");
  for (double v : values_) require_finite(v, "potential value");
  for (std::size_t i = 1; i < breakpoints_.size(); ++i)
    if (!(breakpoints_[i] > breakpoints_[i - 1]))
      throw DomainError("breakpoints must be strictly increasing");
}

double PiecewisePotential::min_value() const {
  return *std::min_element(values_.begin(), values_.end());
}

double PiecewisePotential::operator()(double zeta) const {
  const auto it =
      std::lower_bound(breakpoints_.begin(), breakpoints_.end(), zeta);
  const auto i = static_cast<std::size_t>(it - breakpoints_.begin());
  if (it != breakpoints_.end() && *it == zeta)
    return 0.5 * (values_[i] + values_[i + 1]);
  return values_[i];
}

PiecewisePotential PiecewisePotential::mirrored() const {
  std::vector<double> b(breakpoints_.rbegin(), breakpoints_.rend());
  for (double& x : b) x = -x;
  std::vector<double> v(values_.rbegin(), values_.rend());
  return {std::move(b), std::move(v)};
}

GridPotential::GridPotential(double start, double step, Eigen::VectorXd values,
                             Boundary boundary)
    : start_(start), step_(step), values_(std::move(values)),
      boundary_(boundary) {
  require_finite(start, "grid start");
  if (!(step > 0.0) || !std::isfinite(step))
    throw DomainError("grid step must be positive");
  if (values_.size() < 3) throw DomainError("grid needs at least 3 points");
  if (!values_.allFinite()) throw DomainError("grid values must be finite");
}

Eigen::VectorXd GridPotential::points() const {
  return Eigen::VectorXd::LinSpaced(size(), start_,
                                    start_ + step_ * double(size() - 1));
}

PiecewisePotential delta_well_box(double g, double epsilon) {
  require_width(epsilon);
  require_finite(g, "g");
  return {{-epsilon, epsilon}, {0.0, -g / (2.0 * epsilon), 0.0}};
}

PiecewisePotential delta_prime_pair(double c, double epsilon) {
  require_width(epsilon);
  require_finite(c, "c");
  const double h = c / (epsilon * epsilon);
  return {{-epsilon, 0.0, epsilon}, {0.0, h, -h, 0.0}};
}

PiecewisePotential comb_cell(double g, double period, double epsilon) {
  require_width(epsilon);
  require_finite(g, "g");
  if (!(period > 0.0) || !std::isfinite(period))
    throw DomainError("period must be positive");
  if (!(epsilon < 0.25 * period))
    throw DomainError("comb cell requires epsilon < period / 4");
  const double half = 0.5 * period;
  return {{-half, -epsilon, epsilon, half},
          {0.0, 0.0, -g / (2.0 * epsilon), 0.0, 0.0}};
}

double scarf_core_strength(double v0, double epsilon) {
  require_width(epsilon);
  const double s = std::sin(epsilon);
  return -v0 * epsilon * epsilon / (s * s);
}

GridPotential scarf_regularized(double v0, double epsilon, int points) {
  require_width(epsilon);
  require_finite(v0, "V0");
  if (!(epsilon < 0.5 * std::numbers::pi))
    throw DomainError("core width must be below pi/2");
  if (points < 16) throw DomainError("Scarf grid needs at least 16 points");
  const double h = std::numbers::pi / points;
  const double start = -0.5 * std::numbers::pi + 0.5 * h;
  const double core = -scarf_core_strength(v0, epsilon) / (epsilon * epsilon);
  Eigen::VectorXd v(points);
  for (int i = 0; i < points; ++i) {
    const double z = start + h * i;
    const double s = std::sin(z);
    v[i] = std::abs(z) <= epsilon ? core : v0 / (s * s);
  }
  return {start, h, std::move(v), Boundary::Periodic};
}

BuiltPotential build_potential(const PotentialSpec& spec) {
  return std::visit(
      overloaded{
          [](const DeltaWellBox& s) -> BuiltPotential {
            return delta_well_box(s.g, s.epsilon);
          },
          [](const DeltaPrimePair& s) -> BuiltPotential {
            return delta_prime_pair(s.c, s.epsilon);
          },
          [](const CombCell& s) -> BuiltPotential {
            return comb_cell(s.g, s.period, s.epsilon);
          },
          [](const ScarfRegularized& s) -> BuiltPotential {
            return scarf_regularized(s.v0, s.epsilon, s.points);
          },
      },
      spec);
}

GridPotential sample(const PiecewisePotential& potential, double start,
                     double step, Eigen::Index count, Boundary boundary) {
  if (count < 3) throw DomainError("grid needs at least 3 points");
  Eigen::VectorXd v(count);
  for (Eigen::Index i = 0; i < count; ++i)
    v[i] = potential(start + step * double(i));
  return {start, step, std::move(v), boundary};
}

// --------------------------------------------------------------- spectra

std::vector<double> bound_states(const PiecewisePotential& potential,
                                 EnergyWindow window, double tol,
                                 int scan_points) {
  require_zero_asymptotes(potential);
  if (!(window.lo < window.hi)) throw DomainError("empty energy window");
  if (!(window.hi <= 0.0))
    throw DomainError("bound states lie below the zero asymptote");
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  if (scan_points < 2) throw DomainError("scan needs at least 2 points");

  auto matching = [&](double e) {
    const double kappa = std::sqrt(-2.0 * e);
    const auto m = transfer_matrix<double>(potential, e);
    const double u = m(0, 0) + kappa * m(0, 1);
    const double du = m(1, 0) + kappa * m(1, 1);
    return du + kappa * u;
  };

  std::vector<double> roots;
  const double step = (window.hi - window.lo) / (scan_points - 1);
  double e_prev = window.lo;
  double d_prev = matching(e_prev);
  if (d_prev == 0.0) roots.push_back(e_prev);
  for (int i = 1; i < scan_points; ++i) {
    const double e = i + 1 == scan_points ? window.hi : window.lo + step * i;
    const double d = matching(e);
    if (d == 0.0) {
      // kappa = 0 is the non-normalisable threshold, not a bound state
      if (e < 0.0) roots.push_back(e);
    } else if (d_prev != 0.0 && std::signbit(d) != std::signbit(d_prev)) {
      double lo = e_prev, hi = e, dlo = d_prev;
      while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        const double dm = matching(mid);
        if (dm == 0.0) {
          lo = hi = mid;
          break;
        }
        if (std::signbit(dm) == std::signbit(dlo)) {
          lo = mid;
          dlo = dm;
        } else {
          hi = mid;
        }
      }
      roots.push_back(0.5 * (lo + hi));
    }
    e_prev = e;
    d_prev = d;
  }
  return roots;
}

ScatteringResult scattering(const PiecewisePotential& potential,
                            double energy) {
  require_zero_asymptotes(potential);
  if (!(energy > 0.0) || !std::isfinite(energy))
    throw DomainError("scattering energy must be positive");
  using cd = std::complex<double>;
  const double k = std::sqrt(2.0 * energy);
  const cd ik(0.0, k);
  const auto m = transfer_matrix<cd>(potential, energy);
  const Eigen::Vector2cd u = m * Eigen::Vector2cd(1.0, ik);
  const Eigen::Vector2cd v = m * Eigen::Vector2cd(1.0, -ik);
  const cd r = (ik * u[0] - u[1]) / (v[1] - ik * v[0]);
  const cd t = u[0] + r * v[0];
  ScatteringResult out{energy, t, r, std::norm(t), std::norm(r)};
  const double defect = std::abs(out.transmission + out.reflection - 1.0);
  if (!(defect <= 1e-8))
    throw ConsistencyError("flux not conserved: |T + R - 1| = " +
                           std::to_string(defect));
  return out;
}

BandPoint comb_dispersion(double g, double period, double energy,
                          double epsilon) {
  if (!(energy > 0.0) || !std::isfinite(energy))
    throw DomainError("band energy must be positive");
  const auto cell = comb_cell(g, period, epsilon);
  const auto m = transfer_matrix<double>(cell, energy);
  const double rhs = 0.5 * m.trace();
  return {energy, rhs, std::abs(rhs) <= 1.0};
}

double comb_dispersion_limit(double g, double period, double energy) {
  if (!(energy > 0.0)) throw DomainError("band energy must be positive");
  const double k = std::sqrt(2.0 * energy);
  return std::cos(k * period) - g / k * std::sin(k * period);
}

std::vector<BandPoint> band_scan(double g, double period, double epsilon,
                                 EnergyWindow window, int points) {
  if (!(window.lo > 0.0 && window.lo < window.hi))
    throw DomainError("band window must satisfy 0 < lo < hi");
  if (points < 2) throw DomainError("band scan needs at least 2 points");
  std::vector<BandPoint> out;
  out.reserve(static_cast<std::size_t>(points));
  const double step = (window.hi - window.lo) / (points - 1);
  for (int i = 0; i < points; ++i)
    out.push_back(comb_dispersion(g, period, window.lo + step * i, epsilon));
  return out;
}

// ---------------------------------------------------------- grid methods

namespace {

using SparseMatrix = Eigen::SparseMatrix<double>;

SparseMatrix hamiltonian(const GridPotential& p) {
  const Eigen::Index n = p.size();
  const double h2 = p.step() * p.step();
  const double off = -0.5 / h2;
  std::vector<Eigen::Triplet<double>> t;
  t.reserve(static_cast<std::size_t>(3 * n));
  for (Eigen::Index i = 0; i < n; ++i) {
    t.emplace_back(i, i, p.values()[i] + 1.0 / h2);
    if (i + 1 < n) {
      t.emplace_back(i, i + 1, off);
      t.emplace_back(i + 1, i, off);
    }
  }
  if (p.boundary() == Boundary::Periodic) {
    t.emplace_back(0, n - 1, off);
    t.emplace_back(n - 1, 0, off);
  }
  SparseMatrix h(n, n);
  h.setFromTriplets(t.begin(), t.end());
  return h;
}

SparseMatrix identity(Eigen::Index n) {
  SparseMatrix id(n, n);
  id.setIdentity();
  return id;
}

// Eigenvalues of h below sigma, by Sylvester inertia of the LDL^T factor.
// Returns -1 when the shift hits a singular pivot.
long count_below(const SparseMatrix& h, double sigma) {
  Eigen::SimplicialLDLT<SparseMatrix> ldlt(h - sigma * identity(h.rows()));
  if (ldlt.info() != Eigen::Success) return -1;
  return static_cast<long>((ldlt.vectorD().array() < 0.0).count());
}

}  // namespace

GroundState ground_state(const GridPotential& potential) {
  const SparseMatrix h = hamiltonian(potential);
  const double vmin = potential.values().minCoeff();
  const double vmax = potential.values().maxCoeff();
  const double scale = std::max({1.0, std::abs(vmin), std::abs(vmax)});

  // the kinetic part is positive semi-definite, so vmin bounds from below;
  // Gershgorin bounds from above
  double lo = vmin - 1e-8 * scale;
  double hi = vmax + 2.0 / (potential.step() * potential.step()) + 1.0;
  for (int it = 0; it < 400 && hi - lo > 1e-13 * scale; ++it) {
    double mid = 0.5 * (lo + hi);
    long below = count_below(h, mid);
    if (below < 0) {
      mid = std::nextafter(mid, hi);
      below = count_below(h, mid);
      if (below < 0) break;
    }
    (below == 0 ? lo : hi) = mid;
  }

  const double sigma = lo - std::max(hi - lo, 1e-14 * scale);
  Eigen::SimplicialLDLT<SparseMatrix> ldlt(h - sigma * identity(h.rows()));
  if (ldlt.info() != Eigen::Success)
    throw GroundStateError("shifted Hamiltonian could not be factorised");
  Eigen::VectorXd psi = Eigen::VectorXd::Ones(potential.size());
  psi.normalize();
  for (int it = 0; it < 4; ++it) {
    psi = ldlt.solve(psi);
    if (!psi.allFinite())
      throw GroundStateError("inverse iteration produced non-finite values");
    psi.normalize();
  }
  if (psi.sum() < 0.0) psi = -psi;
  if (!(psi.minCoeff() > 0.0))
    throw GroundStateError("ground state is not strictly positive");
  const double energy = psi.dot(h * psi);
  return {energy, std::move(psi)};
}

GridPotential darboux_transform(const GridPotential& potential,
                                const Eigen::Ref<const Eigen::VectorXd>& psi0,
                                double e0) {
  require_finite(e0, "E0");
  const Eigen::Index n = potential.size();
  if (psi0.size() != n)
    throw DomainError("ground state and potential grids differ in size");
  if (!psi0.allFinite() || !(psi0.minCoeff() > 0.0))
    throw DomainError("ground state must be strictly positive");
  const Eigen::VectorXd l = psi0.array().log().matrix();
  const double h2 = potential.step() * potential.step();
  const auto& v = potential.values();

  if (potential.boundary() == Boundary::Periodic) {
    Eigen::VectorXd out(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      const double left = l[(i + n - 1) % n];
      const double right = l[(i + 1) % n];
      out[i] = v[i] - (left - 2.0 * l[i] + right) / h2;
    }
    return {potential.start(), potential.step(), std::move(out),
            Boundary::Periodic};
  }
  if (n < 5) throw DomainError("Dirichlet grid too short for the transform");
  Eigen::VectorXd out(n - 2);
  for (Eigen::Index i = 1; i + 1 < n; ++i)
    out[i - 1] = v[i] - (l[i - 1] - 2.0 * l[i] + l[i + 1]) / h2;
  return {potential.zeta(1), potential.step(), std::move(out),
          Boundary::Dirichlet};
}

Eigen::VectorXd smoothed_delta_ground_state(double g, double epsilon,
                                            const GridPotential& like) {
  require_width(epsilon);
  Eigen::VectorXd psi(like.size());
  for (Eigen::Index i = 0; i < like.size(); ++i) {
    const double z = std::abs(like.zeta(i));
    const double rho =
        z <= epsilon ? z * z / (2.0 * epsilon) + 0.5 * epsilon : z;
    psi[i] = std::exp(-g * rho);
  }
  return psi;
}

double core_integral(const GridPotential& potential, double half_width) {
  if (!(half_width > 0.0)) throw DomainError("half width must be positive");
  Eigen::Index first = -1, last = -1;
  for (Eigen::Index i = 0; i < potential.size(); ++i) {
    if (std::abs(potential.zeta(i)) <= half_width) {
      if (first < 0) first = i;
      last = i;
    }
  }
  if (first < 0 || last == first)
    throw DomainError("core region holds fewer than two grid points");
  const auto& v = potential.values();
  double sum = 0.5 * (v[first] + v[last]);
  for (Eigen::Index i = first + 1; i < last; ++i) sum += v[i];
  return sum * potential.step();
}

std::vector<CommutationSample> darboux_commutation_check(
    double v0, const EpsilonSchedule& schedule, const CommutationGrid& grid) {
  if (!(v0 >= 0.0) || !std::isfinite(v0))
    throw DomainError("V0 must be non-negative");
  if (!(grid.fixed_region > 0.0))
    throw DomainError("fixed region must be positive");
  // exact ground state |sin|^(s+1), E0 = (s+1)^2 / 2
  const double s = 0.5 * (-1.0 + std::sqrt(1.0 + 8.0 * v0));
  const double power = v0 == 0.0 ? 0.0 : s + 1.0;

  std::vector<CommutationSample> out;
  for (double eps : schedule.values()) {
    if (!(eps < 0.5 * std::numbers::pi)) continue;
    const GridPotential reg = scarf_regularized(v0, eps, grid.points);
    GroundState gs;
    try {
      gs = ground_state(reg);
    } catch (const GroundStateError&) {
      continue;
    }
    const GridPotential path_a = darboux_transform(reg, gs.psi, gs.energy);

    const Eigen::Index n = reg.size();
    const double h2 = reg.step() * reg.step();
    auto log_psi = [&](Eigen::Index i) {
      return power * std::log(std::abs(std::sin(reg.zeta((i + n) % n))));
    };
    const double se = std::sin(eps);
    const double core = (v0 + power) / (se * se);

    double sup = 0.0, sup_fixed = 0.0;
    const double fixed = std::max(2.0 * eps, grid.fixed_region);
    for (Eigen::Index i = 0; i < n; ++i) {
      const double z = reg.zeta(i);
      double b;
      if (std::abs(z) <= eps) {
        b = core;
      } else {
        const double sz = std::sin(z);
        b = v0 / (sz * sz) -
            (log_psi(i - 1) - 2.0 * log_psi(i) + log_psi(i + 1)) / h2;
      }
      const double d = std::abs(path_a.values()[i] - b);
      if (std::abs(z) > 2.0 * eps) sup = std::max(sup, d);
      if (std::abs(z) > fixed) sup_fixed = std::max(sup_fixed, d);
    }
    out.push_back({eps, sup, sup_fixed, gs.energy});
  }
  if (out.size() < 3)
    throw GroundStateError(
        "fewer than three widths produced a usable ground state");
  return out;
}

}  // namespace improper
