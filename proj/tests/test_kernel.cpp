#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "improper/errors.hpp"
#include "improper/kernel.hpp"

using namespace improper;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
const KernelKind kAll[] = {KernelKind::Gaussian, KernelKind::Box,
                           KernelKind::Lorentzian, KernelKind::Sinc};
}  // namespace

TEST_CASE("eval_kernel examples") {
  const DeltaKerneld g1(KernelKind::Gaussian, 1.0);
  CHECK(eval_kernel(g1, 0.0) == doctest::Approx(1.0 / std::sqrt(2 * std::numbers::pi)).epsilon(1e-15));
  CHECK(eval_kernel(g1, 0.0, 1) == 0.0);

  const DeltaKerneld box(KernelKind::Box, 0.5);
  CHECK(eval_kernel(box, 0.0) == 1.0);
  CHECK(eval_kernel(box, 0.7) == 0.0);
  CHECK(eval_kernel(box, 0.5) == 1.0);  // closed support
}

TEST_CASE("construction and order errors") {
  CHECK_THROWS_AS(DeltaKerneld(KernelKind::Box, 0.0), DomainError);
  CHECK_THROWS_AS(DeltaKerneld(KernelKind::Gaussian, -1.0), DomainError);
  CHECK_THROWS_AS(DeltaKerneld(KernelKind::Gaussian, kInf), DomainError);
  const DeltaKerneld box(KernelKind::Box, 0.5);
  CHECK_THROWS_AS(eval_kernel(box, 0.1, 1), UnsupportedDerivative);
  const DeltaKerneld g(KernelKind::Gaussian, 0.5);
  CHECK_THROWS_AS(eval_kernel(g, 0.1, 5), UnsupportedDerivative);
  CHECK_THROWS_AS(eval_kernel(g, 0.1, -1), UnsupportedDerivative);
}

TEST_CASE("kernel_mass examples") {
  const DeltaKerneld g1(KernelKind::Gaussian, 1.0);
  CHECK(kernel_mass(g1, -kInf, kInf) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(kernel_mass(g1, -1.0, 1.0) == doctest::Approx(std::erf(1 / std::sqrt(2.0))).epsilon(1e-14));
  CHECK(kernel_mass(g1, -1.0, 1.0) == doctest::Approx(0.6826895).epsilon(1e-7));
  const DeltaKerneld box(KernelKind::Box, 0.5);
  CHECK(kernel_mass(box, 0.0, 0.5) == 0.5);

  const DeltaKerneld sinc(KernelKind::Sinc, 0.1);
  CHECK_THROWS_AS(kernel_mass(sinc, -kInf, 1.0), DomainError);
  CHECK_THROWS_AS(kernel_mass(g1, 1.0, 1.0), DomainError);
}

TEST_CASE("unit total mass") {
  for (auto kind : {KernelKind::Gaussian, KernelKind::Box, KernelKind::Lorentzian}) {
    for (double eps : {0.01, 0.3, 2.0}) {
      const DeltaKerneld k(kind, eps);
      CHECK(std::abs(kernel_mass(k, -kInf, kInf) - 1.0) < 1e-12);
    }
  }
  // improper Riemann sense: symmetric masses approach 1
  const DeltaKerneld sinc(KernelKind::Sinc, 0.1);
  CHECK(std::abs(kernel_mass(sinc, -1e4, 1e4) - 1.0) < 1e-4);
}

TEST_CASE("evenness is exact") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> z(-3.0, 3.0);
  for (auto kind : kAll) {
    const DeltaKerneld k(kind, 0.37);
    for (int i = 0; i < 200; ++i) {
      const double x = z(rng);
      CHECK(eval_kernel(k, x) == eval_kernel(k, -x));
    }
  }
}

TEST_CASE("box support is exact") {
  const DeltaKerneld box(KernelKind::Box, 0.25);
  for (double x : {0.2500001, 0.3, 1.0, -0.26, -5.0}) CHECK(eval_kernel(box, x) == 0.0);
}

TEST_CASE("derivatives agree with finite differences") {
  for (auto kind : {KernelKind::Gaussian, KernelKind::Lorentzian, KernelKind::Sinc}) {
    for (double eps : {0.2, 1.0}) {
      const DeltaKerneld k(kind, eps);
      const double h = 1e-5 * eps;
      for (int n = 1; n <= kMaxDerivativeOrder; ++n) {
        for (double x : {0.13, 0.5, 1.7, -0.9}) {
          const double zeta = x * eps;
          const double fd = (eval_kernel(k, zeta + h, n - 1) -
                             eval_kernel(k, zeta - h, n - 1)) / (2 * h);
          const double exact = eval_kernel(k, zeta, n);
          CAPTURE(to_string(kind));
          CAPTURE(n);
          CAPTURE(zeta);
          const double scale = std::max(std::abs(exact),
                                        1e-3 * std::pow(eps, -n - 1));
          CHECK(std::abs(fd - exact) <= 1e-6 * scale);
        }
      }
    }
  }
}

TEST_CASE("mass additivity") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (auto kind : kAll) {
    const DeltaKerneld k(kind, 0.3);
    for (int i = 0; i < 100; ++i) {
      double p[3] = {u(rng), u(rng), u(rng)};
      std::sort(p, p + 3);
      if (p[1] - p[0] < 1e-6 || p[2] - p[1] < 1e-6) continue;
      CHECK(std::abs(kernel_mass(k, p[0], p[2]) -
                     (kernel_mass(k, p[0], p[1]) + kernel_mass(k, p[1], p[2]))) < 1e-12);
    }
  }
}

TEST_CASE("sine integral") {
  CHECK(sine_integral(0.0) == 0.0);
  CHECK(sine_integral(1.0) == doctest::Approx(0.94608307036718301).epsilon(1e-14));
  CHECK(sine_integral(5.0) == doctest::Approx(1.5499312449446741).epsilon(1e-13));
  CHECK(sine_integral(-5.0) == doctest::Approx(-1.5499312449446741).epsilon(1e-13));
  CHECK(sine_integral(1e6) == doctest::Approx(std::numbers::pi / 2).epsilon(1e-6));
}

TEST_CASE("smoothed heaviside") {
  CHECK(heaviside_smooth(0.1, 0.0) == 0.5);
  CHECK(std::abs(heaviside_smooth(0.1, 10.0) - 1.0) < 1e-12);
  CHECK(heaviside_smooth(0.1, -10.0) < 1e-12);
  const double h = 1e-6;
  const double fd = (heaviside_smooth(0.1, 0.05 + h) - heaviside_smooth(0.1, 0.05 - h)) / (2 * h);
  CHECK(std::abs(fd - eval_kernel(DeltaKerneld(KernelKind::Gaussian, 0.1), 0.05)) < 1e-6);
  CHECK_THROWS_AS(heaviside_smooth(0.0, 1.0), DomainError);
}

TEST_CASE("array overload matches pointwise values") {
  const DeltaKerneld k(KernelKind::Lorentzian, 0.4);
  const Eigen::ArrayXd z = Eigen::ArrayXd::LinSpaced(21, -2.0, 2.0);
  const Eigen::ArrayXd v = eval_kernel(k, z, 2);
  for (Eigen::Index i = 0; i < z.size(); ++i) CHECK(v[i] == eval_kernel(k, z[i], 2));
}
