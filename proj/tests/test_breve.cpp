#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "improper/breve.hpp"
#include "improper/errors.hpp"

using namespace improper;

TEST_CASE("eval_breve examples") {
  CHECK(eval_breve(BreveKerneld(BreveKind::Breve, 0.1), 0.05) == doctest::Approx(-100.0).epsilon(1e-14));
  CHECK(eval_breve(BreveKerneld(BreveKind::DeltaPrimeBox, 0.1), -0.05) == doctest::Approx(100.0).epsilon(1e-14));
  CHECK(eval_breve(BreveKerneld(BreveKind::Breve, 0.1), 0.2) == 0.0);
  CHECK(eval_breve(BreveKerneld(BreveKind::DeltaPrimeBox, 0.1), 0.0) == 0.0);
  CHECK_THROWS_AS(BreveKerneld(BreveKind::Breve, 0.0), DomainError);
}

TEST_CASE("decomposition of Delta' holds exactly") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> ue(1e-3, 1.0);
  std::uniform_real_distribution<double> uz(-1.5, 1.5);
  int checked = 0;
  while (checked < 1000) {
    const double eps = ue(rng);
    const double z = uz(rng);
    if (z == 0.0) continue;
    const double breve = eval_breve(BreveKerneld(BreveKind::Breve, eps), z);
    const double theta = z > 0 ? 1.0 : 0.0;
    const double split = breve * theta - breve * (1.0 - theta);
    // Delta' uses open intervals; the boundary |z| = eps has measure zero
    if (std::abs(z) == eps) continue;
    CHECK(eval_breve(BreveKerneld(BreveKind::DeltaPrimeBox, eps), z) == split);
    ++checked;
  }
}

TEST_CASE("breve actions") {
  const auto sched = EpsilonSchedule::defaults();
  const Integrand one{[](double) { return 1.0; }};
  const auto a = breve_action(one, BreveWeight::AbsZeta, sched);
  CHECK(std::abs(a.value + 1.0) < 1e-8);

  const Integrand phi{[](double z) { return std::abs(z) * std::exp(-z); }};
  CHECK(std::abs(breve_action(phi, BreveWeight::None, sched).value + 1.0) < 1e-6);

  const Integrand sq{[](double z) { return z * z; }};
  CHECK(std::abs(breve_action(sq, BreveWeight::None, sched).value) < 1e-8);

  const auto d = breve_action(one, BreveWeight::None, sched);
  CHECK(d.diverged);
  CHECK(std::isnan(d.value));
  CHECK(d.order == doctest::Approx(-1.0).epsilon(0.1));
}

TEST_CASE("exact per-width values") {
  const auto sched = EpsilonSchedule::defaults();
  const Integrand one{[](double) { return 1.0; }};
  for (const auto& s : breve_samples(one, BreveWeight::None, sched))
    CHECK(s.value == doctest::Approx(-2.0 / s.epsilon).epsilon(1e-13));
  const Integrand sq{[](double z) { return z * z; }};
  for (const auto& s : breve_samples(sq, BreveWeight::None, sched))
    CHECK(s.value == doctest::Approx(-2.0 * s.epsilon / 3.0).epsilon(1e-12));
}

TEST_CASE("delta prime action") {
  const auto sched = EpsilonSchedule::defaults();
  const Integrand id{[](double z) { return z; }};
  for (const auto& s : delta_prime_samples(id, sched)) CHECK(std::abs(s.value + 1.0) < 1e-14);
  CHECK(std::abs(delta_prime_action(id, sched).value + 1.0) < 1e-14);

  const Integrand cosine{[](double z) { return std::cos(z); }};
  CHECK(std::abs(delta_prime_action(cosine, sched).value) < 1e-8);

  const Integrand ex{[](double z) { return std::exp(z); }};
  for (const auto& s : delta_prime_samples(ex, sched)) {
    const double e = s.epsilon;
    const double oracle = -(std::exp(e) + std::exp(-e) - 2.0) / (e * e);
    CHECK(s.value == doctest::Approx(oracle).epsilon(1e-10));
  }
  CHECK(std::abs(delta_prime_action(ex, sched).value + 1.0) < 1e-6);
}

TEST_CASE("zero mass of Delta'") {
  const Integrand one{[](double) { return 1.0; }};
  for (const auto& s : delta_prime_samples(one, EpsilonSchedule::defaults()))
    CHECK(std::abs(s.value) < 1e-12);
}

TEST_CASE("agreement with the derivative action") {
  const auto sched = EpsilonSchedule::defaults();
  const Integrand corpus[] = {
      {[](double z) { return std::sin(z); }},
      {[](double z) { return std::exp(z); }},
      {[](double z) { return 1.0 / (1.0 + (z - 0.5) * (z - 0.5)); }},
  };
  for (const auto& f : corpus) {
    const double a = delta_prime_action(f, sched).value;
    const double b = distribution_action(f, ActionKind::derivative(1), KernelKind::Gaussian, sched).value;
    CHECK(std::abs(a - b) < 1e-5);
  }
}

TEST_CASE("mean-value bracket at finite width") {
  const Integrand f{[](double z) { return 2.0 + std::sin(3.0 * z) + z * z; }};
  for (const auto& s : breve_samples(f, BreveWeight::AbsZeta, EpsilonSchedule::defaults())) {
    double lo = 1e300, hi = -1e300;
    for (int i = 0; i <= 2000; ++i) {
      const double z = -s.epsilon + 2.0 * s.epsilon * i / 2000.0;
      lo = std::min(lo, f(z));
      hi = std::max(hi, f(z));
    }
    CHECK(s.value >= -hi - 1e-12);
    CHECK(s.value <= -lo + 1e-12);
  }
}

TEST_CASE("stronger divergence than delta") {
  const Integrand f{[](double z) { return std::cos(z) + 0.5; }};
  const auto e = breve_action(f, BreveWeight::None, EpsilonSchedule::defaults());
  CHECK(e.diverged);
  CHECK(std::abs(e.order + 1.0) < 0.1);
}
