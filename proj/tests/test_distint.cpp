#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "improper/distint.hpp"
#include "improper/errors.hpp"
#include "improper/quadrature.hpp"

using namespace improper;

namespace {

Integrand fn(double (*f)(double)) {
  return {[f](double z) { return f(z); }};
}

const Integrand kCos = fn([](double z) { return std::cos(z); });
const Integrand kExp = fn([](double z) { return std::exp(z); });
const Integrand kRational = fn([](double z) { return 1.0 / (1.0 + z * z); });

}  // namespace

TEST_CASE("quadrature basics") {
  const double cuts[] = {0.0, std::numbers::pi};
  const auto r = integrate([](double x) { return std::sin(x); }, cuts, {1e-13, 0.0, 100});
  CHECK(std::abs(r.value - 2.0) < 1e-13);
  CHECK(r.error <= 1e-13);

  const double wide[] = {0.0, 1.0};  // endpoints are never sampled
  CHECK_THROWS_AS(integrate([](double x) { return 1.0 / std::sqrt(std::abs(x)); }, wide,
                            {1e-14, 0.0, 5}),
                  QuadratureBudgetError);
  try {
    integrate([](double x) { return 1.0 / std::sqrt(std::abs(x)); }, wide, {1e-14, 0.0, 5});
  } catch (const QuadratureBudgetError& e) {
    CHECK(std::isfinite(e.estimate()));
    CHECK(e.error_bound() > 1e-14);
  }
}

TEST_CASE("integrate_against examples") {
  const Integrand one{[](double) { return 1.0; }};
  CHECK(std::abs(integrate_against(one, DeltaKerneld(KernelKind::Box, 0.5), {-1, 1}, 1e-10) - 1.0) < 1e-10);
  const Integrand sq{[](double z) { return z * z; }};
  CHECK(std::abs(integrate_against(sq, DeltaKerneld(KernelKind::Gaussian, 1.0), {-12, 12}, 1e-10) - 1.0) < 1e-10);
  const Integrand id{[](double z) { return z; }};
  CHECK(std::abs(integrate_against(id, DeltaKerneld(KernelKind::Gaussian, 1.0), {-12, 12}, 1e-10)) < 1e-10);
  CHECK_THROWS_AS(integrate_against(one, DeltaKerneld(KernelKind::Box, 0.5), {0.1, 1}, 1e-10), DomainError);
}

TEST_CASE("singular origin is punctured") {
  const Integrand inv{[](double z) { return 1.0 / z; }, true};
  const double v = integrate_against(inv, DeltaKerneld(KernelKind::Gaussian, 0.3), {-3.6, 3.6}, 1e-12);
  CHECK(v == 0.0);
}

TEST_CASE("epsilon_limit examples") {
  const Sample lin[] = {{0.4, 1.4}, {0.2, 1.2}, {0.1, 1.1}};
  auto e = epsilon_limit(lin);
  CHECK(!e.diverged);
  CHECK(e.value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(e.order == doctest::Approx(1.0).epsilon(1e-9));

  const Sample quad[] = {{0.4, 1.16}, {0.2, 1.04}, {0.1, 1.01}};
  e = epsilon_limit(quad);
  CHECK(e.value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(e.order == doctest::Approx(2.0).epsilon(1e-9));

  const Sample grow[] = {{0.4, -5}, {0.2, -10}, {0.1, -20}};
  e = epsilon_limit(grow);
  CHECK(e.diverged);
  CHECK(std::isnan(e.value));
  CHECK(e.order == doctest::Approx(-1.0).epsilon(1e-9));
}

TEST_CASE("epsilon_limit preconditions and model consistency") {
  const Sample two[] = {{0.4, 1.0}, {0.2, 1.0}};
  CHECK_THROWS_AS(epsilon_limit(two), InsufficientData);
  const Sample unordered[] = {{0.1, 1.0}, {0.2, 1.0}, {0.4, 1.0}};
  CHECK_THROWS_AS(epsilon_limit(unordered), DomainError);

  // non-geometric widths, p = 1.5
  const double eps[] = {0.5, 0.3, 0.17, 0.09};
  std::vector<Sample> s;
  for (double x : eps) s.push_back({x, 2.0 - 3.0 * std::pow(x, 1.5)});
  const auto e = epsilon_limit(s);
  CHECK(e.value == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(e.order == doctest::Approx(1.5).epsilon(1e-8));
  CHECK(e.residual >= 0.0);
  // the fitted model reproduces the last three samples within 10 * residual
  const double c = (s[3].value - e.value) / std::pow(s[3].epsilon, e.order);
  for (std::size_t i = 1; i < s.size(); ++i)
    CHECK(std::abs(e.value + c * std::pow(s[i].epsilon, e.order) - s[i].value) <=
          10 * e.residual + 1e-14);
}

TEST_CASE("constant sequences are recognised as converged") {
  const Sample flat[] = {{0.4, 3.0}, {0.2, 3.0}, {0.1, 3.0}};
  const auto e = epsilon_limit(flat);
  CHECK(!e.diverged);
  CHECK(e.value == 3.0);
}

TEST_CASE("delta action examples") {
  const auto sched = EpsilonSchedule::defaults();
  CHECK(std::abs(distribution_action(kCos, ActionKind::delta(), KernelKind::Gaussian, sched).value - 1.0) < 1e-8);
  const Integrand sq{[](double z) { return z * z; }};
  CHECK(std::abs(distribution_action(sq, ActionKind::derivative(2), KernelKind::Gaussian, sched).value - 2.0) < 1e-6);
  CHECK(std::abs(distribution_action(kCos, ActionKind::moment(), KernelKind::Box, sched).value) < 1e-10);
  const EpsilonSchedule fourier(0.1, 0.5, 8);
  CHECK(std::abs(distribution_action(kExp, ActionKind::fourier(), KernelKind::Gaussian, fourier).value - 1.0) < 1e-3);
}

TEST_CASE("kernel independence and order law") {
  const auto sched = EpsilonSchedule::defaults();
  std::vector<Integrand> corpus{kCos, kExp, kRational};
  for (int deg = 0; deg <= 4; ++deg)
    corpus.push_back({[deg](double z) { return 1.0 + std::pow(z, deg) + 0.5 * z; }});
  for (const auto& f : corpus) {
    const double g = distribution_action(f, ActionKind::delta(), KernelKind::Gaussian, sched).value;
    const double b = distribution_action(f, ActionKind::delta(), KernelKind::Box, sched).value;
    const double l = distribution_action(f, ActionKind::delta(), KernelKind::Lorentzian, sched).value;
    CHECK(std::abs(g - b) < 1e-6);
    CHECK(std::abs(g - l) < 1e-6);
    CHECK(std::abs(b - l) < 1e-6);
  }
  for (auto kind : {KernelKind::Box, KernelKind::Gaussian}) {
    for (const auto& f : {kCos, kExp, kRational}) {
      const auto e = distribution_action(f, ActionKind::delta(), kind, sched);
      CHECK(e.order >= 1.7);
      CHECK(e.order <= 2.3);
    }
  }
}

TEST_CASE("linearity") {
  const auto sched = EpsilonSchedule::defaults();
  const Integrand combo{[](double z) { return 2.0 * std::cos(z) - 3.0 * std::exp(z); }};
  for (auto kind : {KernelKind::Gaussian, KernelKind::Box, KernelKind::Lorentzian}) {
    const double a = distribution_action(kCos, ActionKind::delta(), kind, sched).value;
    const double b = distribution_action(kExp, ActionKind::delta(), kind, sched).value;
    const double c = distribution_action(combo, ActionKind::delta(), kind, sched).value;
    CHECK(std::abs(c - (2 * a - 3 * b)) < 1e-9);
  }
}

TEST_CASE("moment of an even f vanishes at every width") {
  const auto samples = action_samples(kCos, ActionKind::moment(), KernelKind::Box,
                                      EpsilonSchedule::defaults(), 1e-13);
  for (const auto& s : samples) CHECK(s.value == 0.0);
}

TEST_CASE("derivative actions") {
  const auto sched = EpsilonSchedule::defaults();
  const Integrand sine{[](double z) { return std::sin(z); }};
  CHECK(std::abs(distribution_action(sine, ActionKind::derivative(1), KernelKind::Gaussian, sched).value + 1.0) < 1e-6);
  CHECK_THROWS_AS(distribution_action(sine, ActionKind::derivative(1), KernelKind::Box, sched), UnsupportedDerivative);
  CHECK_THROWS_AS(ActionKind::derivative(5), UnsupportedDerivative);
  CHECK_THROWS_AS(ActionKind::derivative(0), UnsupportedDerivative);
}

TEST_CASE("schedule validation") {
  CHECK_THROWS_AS(EpsilonSchedule(0.0, 0.5, 8), DomainError);
  CHECK_THROWS_AS(EpsilonSchedule(0.4, 1.0, 8), DomainError);
  CHECK_THROWS_AS(EpsilonSchedule(0.4, 0.5, 2), DomainError);
  const auto v = EpsilonSchedule(0.4, 0.5, 4).values();
  REQUIRE(v.size() == 4);
  CHECK(v[3] == 0.05);
  for (std::size_t i = 1; i < v.size(); ++i) CHECK(v[i] < v[i - 1]);
}

TEST_CASE("fourier window is commensurate with the cutoffs") {
  const double w = fourier_window(10.0);
  for (int j = 0; j < 8; ++j) {
    const double k = 10.0 * std::pow(2.0, j);
    CHECK(std::abs(std::cos(k * w) - 1.0) < 1e-9);
  }
  CHECK(w >= 1.0);
}
