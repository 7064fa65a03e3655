#include "improper/breve.hpp"

namespace improper {

std::vector<Sample> breve_samples(const Integrand& f, BreveWeight weight,
                                  const EpsilonSchedule& schedule,
                                  double tol) {
  std::vector<Sample> out;
  for (double eps : schedule.values()) {
    const BreveKerneld kernel(BreveKind::Breve, eps);
    std::function<double(double)> w;
    if (weight == BreveWeight::AbsZeta)
      w = [&](double z) { return std::abs(z) * eval_breve(kernel, z); };
    else
      w = [&](double z) { return eval_breve(kernel, z); };
    out.push_back({eps, integrate_weighted(f, w, {-eps, eps}, {}, tol)});
  }
  return out;
}

LimitEstimate breve_action(const Integrand& f, BreveWeight weight,
                           const EpsilonSchedule& schedule, double tol) {
  const auto samples = breve_samples(f, weight, schedule, tol);
  return epsilon_limit(samples);
}

std::vector<Sample> delta_prime_samples(const Integrand& f,
                                        const EpsilonSchedule& schedule,
                                        double tol) {
  std::vector<Sample> out;
  for (double eps : schedule.values()) {
    const BreveKerneld kernel(BreveKind::DeltaPrimeBox, eps);
    const double value = integrate_weighted(
        f, [&](double z) { return eval_breve(kernel, z); }, {-eps, eps}, {},
        tol);
    out.push_back({eps, value});
  }
  return out;
}

LimitEstimate delta_prime_action(const Integrand& f,
                                 const EpsilonSchedule& schedule,
                                 double tol) {
  const auto samples = delta_prime_samples(f, schedule, tol);
  return epsilon_limit(samples);
}

}  // namespace improper
