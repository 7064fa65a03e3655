#pragma once

// Globally adaptive 7/15-point Gauss-Kronrod quadrature with user
// breakpoints. Panels are bisected in order of decreasing error estimate
// until the total estimate meets the tolerance or the panel budget runs out.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "improper/errors.hpp"

namespace improper {

struct QuadratureOptions {
  double abs_tol = 1e-10;
  double rel_tol = 0.0;
  std::size_t max_panels = 5000;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  double magnitude = 0.0;  // integral of |f|, the scale of rounding noise
  std::size_t panels = 0;
};

namespace detail {

struct Panel {
  double a, b;
  double value;
  double error;
  double roundoff;  // error floor from finite precision
  double magnitude;
};

inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <typename F>
Panel gauss_kronrod15(F& f, double a, double b) {
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  std::array<double, 7> f1{}, f2{};

  const double fc = f(centre);
  double gauss = fc * kGaussWeights[3];
  double kronrod = fc * kKronrodWeights[7];
  double resabs = std::abs(kronrod);
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kKronrodNodes[j];
    f1[j] = f(centre - dx);
    f2[j] = f(centre + dx);
    const double pair = f1[j] + f2[j];
    kronrod += kKronrodWeights[j] * pair;
    resabs += kKronrodWeights[j] * (std::abs(f1[j]) + std::abs(f2[j]));
    if (j % 2 == 1) gauss += kGaussWeights[j / 2] * pair;
  }
  const double mean = 0.5 * kronrod;
  double resasc = kKronrodWeights[7] * std::abs(fc - mean);
  for (int j = 0; j < 7; ++j)
    resasc += kKronrodWeights[j] *
              (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));

  const double scale = std::abs(half);
  const double value = kronrod * half;
  resabs *= scale;
  resasc *= scale;
  double error = std::abs((kronrod - gauss) * half);
  if (resasc != 0.0 && error != 0.0)
    error = resasc * std::min(1.0, std::pow(200.0 * error / resasc, 1.5));
  const double roundoff = 50.0 * kEps * resabs;
  error = std::max(error, roundoff);
  if (!std::isfinite(value) || !std::isfinite(error))
    throw DomainError("integrand is not finite on the integration panel");
  return {a, b, value, error, roundoff, resabs};
}

}  // namespace detail

/// Integrate f over [cuts.front(), cuts.back()], starting from one panel per
/// consecutive pair of cuts. `cuts` must be sorted ascending.
template <typename F>
QuadratureResult integrate(F&& f, std::span<const double> cuts,
                           const QuadratureOptions& options = {}) {
  if (cuts.size() < 2) throw DomainError("integration needs two endpoints");
  auto by_error = [](const detail::Panel& x, const detail::Panel& y) {
    return x.error < y.error;
  };

  std::vector<detail::Panel> heap;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (!(cuts[i] <= cuts[i + 1])) throw DomainError("cuts must be sorted");
    if (cuts[i] == cuts[i + 1]) continue;
    heap.push_back(detail::gauss_kronrod15(f, cuts[i], cuts[i + 1]));
  }
  std::make_heap(heap.begin(), heap.end(), by_error);

  while (true) {
    double value = 0, error = 0, roundoff = 0, magnitude = 0;
    for (const auto& p : heap) {
      value += p.value;
      error += p.error;
      roundoff += p.roundoff;
      magnitude += p.magnitude;
    }
    const double target = std::max(
        {options.abs_tol, options.rel_tol * std::abs(value), 2.0 * roundoff});
    if (error <= target) return {value, error, magnitude, heap.size()};
    if (heap.size() >= options.max_panels)
      throw QuadratureBudgetError(value, error);

    std::pop_heap(heap.begin(), heap.end(), by_error);
    const detail::Panel worst = heap.back();
    heap.pop_back();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b))
      throw QuadratureBudgetError(value, error);
    heap.push_back(detail::gauss_kronrod15(f, worst.a, mid));
    std::push_heap(heap.begin(), heap.end(), by_error);
    heap.push_back(detail::gauss_kronrod15(f, mid, worst.b));
    std::push_heap(heap.begin(), heap.end(), by_error);
  }
}

}  // namespace improper
