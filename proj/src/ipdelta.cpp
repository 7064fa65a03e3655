#include "improper/ipdelta.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace improper {

namespace {

double int_pow(double x, int k) {
  double out = 1.0;
  for (int i = 0; i < k; ++i) out *= x;
  return out;
}

void check_order(int k) {
  if (k < 1)
    throw DomainError(
        "singularity order k must be >= 1 (k = 0 is the ordinary delta)");
}

// |zeta|^k d/dzeta (zeta delta(eps, zeta)) for the Gaussian delta
double unit_profile(int k, const DeltaKerneld& base, double zeta) {
  const double x = zeta / base.width();
  return int_pow(std::abs(zeta), k) * (1.0 - x * x) *
         eval_kernel(base, zeta);
}

std::vector<double> gaussian_breaks(double eps) {
  return {-12 * eps, -8 * eps, -4 * eps, -eps, eps, 4 * eps, 8 * eps, 12 * eps};
}

}  // namespace

double ip_alpha(int k, double epsilon, AlphaMode mode) {
  check_order(k);
  if (!(epsilon > 0.0)) throw DomainError("epsilon must be positive");
  if (mode == AlphaMode::ClosedForm) {
    return std::pow(epsilon, -k) * std::sqrt(std::numbers::pi) /
           (std::pow(2.0, 0.5 * (k + 1)) * std::tgamma(0.5 * (k + 1)));
  }
  const DeltaKerneld base(KernelKind::Gaussian, epsilon);
  const double w = kGaussianWindowWidths * epsilon;
  const Integrand one{[](double) { return 1.0; }, false};
  // tolerance relative to the profile scale eps^k
  const double tol = 1e-16 * std::pow(epsilon, k);
  const double mass = integrate_weighted(
      one, [&](double z) { return unit_profile(k, base, z); }, {-w, w},
      gaussian_breaks(epsilon), tol);
  return 1.0 / mass;
}

IPKernel::IPKernel(int k, double omega, double epsilon, AlphaMode mode)
    : k_(k),
      omega_(omega),
      base_(KernelKind::Gaussian, epsilon),
      mode_(mode),
      alpha_(ip_alpha(k, epsilon, mode)) {
  if (!std::isfinite(omega)) throw DomainError("omega_k must be finite");
}

double eval_ip_kernel(const IPKernel& ip, double zeta, bool hatted) {
  const double plain = ip.alpha() * unit_profile(ip.k(), ip.base(), zeta);
  if (!hatted) return plain;
  return (1.0 + ip.omega() * int_pow(std::abs(zeta), ip.k())) * plain;
}

std::vector<Sample> ip_action_samples(const Integrand& psi, int k,
                                      double omega,
                                      const EpsilonSchedule& schedule,
                                      int singularity_order, double tol) {
  check_order(k);
  if (singularity_order < 0)
    throw DomainError("singularity order must be non-negative");
  if (singularity_order > k)
    throw DomainError("declared singularity order exceeds k");
  // psi |zeta|^k stays bounded for j <= k, so the origin is kept as a cut
  // point (never sampled) instead of being punctured
  Integrand f = psi;
  f.singular_origin = false;

  const double w = kGaussianWindowWidths * schedule.largest();
  std::vector<Sample> out;
  for (double eps : schedule.values()) {
    const IPKernel ip(k, omega, eps);
    QuadratureResult r;
    try {
      r = integrate_weighted_result(
          f, [&](double z) { return eval_ip_kernel(ip, z, true); }, {-w, w},
          gaussian_breaks(eps), tol);
    } catch (const std::exception& e) {
      if (singularity_order == 0) throw;
      // an understated singularity leaves psi |zeta|^k non-integrable
      throw DivergenceError(
          std::string("finite-width action does not exist; singularity "
                      "stronger than declared (") +
          e.what() + ")");
    }
    out.push_back({eps, r.value, r.magnitude});
  }
  return out;
}

LimitEstimate ip_action(const Integrand& psi, int k, double omega,
                        const EpsilonSchedule& schedule,
                        int singularity_order, double tol) {
  const auto samples =
      ip_action_samples(psi, k, omega, schedule, singularity_order, tol);
  return epsilon_limit(samples);
}

double ip_smooth(const Integrand& phi, int k, double omega,
                 const EpsilonSchedule& schedule, int singularity_order,
                 double tol) {
  const auto estimate =
      ip_action(phi, k, omega, schedule, singularity_order, tol);
  if (estimate.diverged)
    throw DivergenceError("tilde value does not exist: action diverges");
  return estimate.value;
}

double ip_singular_moment(int k, double epsilon, double tol) {
  const IPKernel ip(k, 0.0, epsilon);
  const Integrand one{[](double) { return 1.0; }, false};
  const double w = kGaussianWindowWidths * epsilon;
  // |zeta|^-k cancels the |zeta|^k factor of the profile
  auto reduced = [&](double z) {
    const double x = z / epsilon;
    return ip.alpha() * (1.0 - x * x) * eval_kernel(ip.base(), z);
  };
  return integrate_weighted(one, reduced, {-w, w}, gaussian_breaks(epsilon),
                            tol);
}

}  // namespace improper
