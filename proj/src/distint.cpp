#include "improper/distint.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

#include "improper/quadrature.hpp"

namespace improper {

EpsilonSchedule::EpsilonSchedule(double start, double ratio, int steps)
    : start_(start), ratio_(ratio), steps_(steps) {
  if (!(start > 0.0) || !std::isfinite(start))
    throw DomainError("schedule start must be positive");
  if (!(ratio > 0.0 && ratio < 1.0))
    throw DomainError("schedule ratio must lie in (0, 1)");
  if (steps < 3) throw DomainError("schedule needs at least 3 steps");
}

std::vector<double> EpsilonSchedule::values() const {
  std::vector<double> out(static_cast<std::size_t>(steps_));
  double eps = start_;
  for (auto& e : out) {
    e = eps;
    eps *= ratio_;
  }
  return out;
}

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct PowerFit {
  double limit;
  double order;
  double coeff;
  bool roundoff;  // differences indistinguishable from rounding noise
};

// Exponent p solving (e2^p - e3^p) / (e1^p - e2^p) = q.
double fit_exponent(double e1, double e2, double e3, double q) {
  const double r1 = e2 / e1;
  const double r2 = e3 / e2;
  if (std::abs(r1 - r2) <= 1e-12 * r1) return std::log(q) / std::log(r1);
  auto ratio = [&](double p) {
    if (std::abs(p) < 1e-9) return std::log(e2 / e3) / std::log(e1 / e2);
    return (std::pow(e2, p) - std::pow(e3, p)) /
           (std::pow(e1, p) - std::pow(e2, p));
  };
  // ratio(p) decreases monotonically in p for decreasing widths
  double lo = -30.0, hi = 30.0;
  if (q > ratio(lo) || q < ratio(hi)) return kNaN;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (ratio(mid) > q ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// rounding level of a sample whose integrand magnitude is known
double noise_floor(const Sample& s) {
  return 256.0 * std::numeric_limits<double>::epsilon() * s.magnitude;
}

std::optional<PowerFit> fit_three(const Sample& s1, const Sample& s2,
                                  const Sample& s3) {
  const double d1 = s1.value - s2.value;
  const double d2 = s2.value - s3.value;
  const double scale =
      std::max({std::abs(s1.value), std::abs(s2.value), std::abs(s3.value)});
  if (std::max(std::abs(d1), std::abs(d2)) <=
      std::max(64.0 * std::numeric_limits<double>::epsilon() * scale,
               noise_floor(s1) + noise_floor(s2) + noise_floor(s3)))
    return PowerFit{s3.value, std::numeric_limits<double>::infinity(), 0.0,
                    true};
  const double q = d2 / d1;
  if (!(q > 0.0) || !std::isfinite(q)) return std::nullopt;
  const double p = fit_exponent(s1.epsilon, s2.epsilon, s3.epsilon, q);
  if (!std::isfinite(p)) return std::nullopt;
  const double c = d2 / (std::pow(s2.epsilon, p) - std::pow(s3.epsilon, p));
  return PowerFit{s3.value - c * std::pow(s3.epsilon, p), p, c, false};
}

struct Refined {
  double value;
  double residual;
};

// Richardson table over a geometric schedule with orders p0, p0 + 1, ...
// when the fitted order sits on an integer; keeps the level whose change
// from the previous level is smallest.
std::optional<Refined> richardson_refine(std::span<const Sample> samples,
                                         double order) {
  const double p0 = std::round(order);
  if (p0 < 1.0 || std::abs(order - p0) > 0.25) return std::nullopt;
  const std::size_t n = samples.size();
  const double r = samples[1].epsilon / samples[0].epsilon;
  for (std::size_t i = 1; i < n; ++i)
    if (std::abs(samples[i].epsilon / samples[i - 1].epsilon - r) > 1e-9 * r)
      return std::nullopt;
  std::vector<double> level(n);
  for (std::size_t i = 0; i < n; ++i) level[i] = samples[i].value;
  double last = level.back();
  std::optional<Refined> best;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const double f = std::pow(r, -(p0 + static_cast<double>(j)));
    for (std::size_t i = 0; i + 1 < level.size(); ++i)
      level[i] = (f * level[i + 1] - level[i]) / (f - 1.0);
    level.pop_back();
    const double diff = std::abs(level.back() - last);
    if (j > 0 && (!best || diff < best->residual)) best = Refined{level.back(), diff};
    last = level.back();
  }
  return best;
}

}  // namespace

LimitEstimate epsilon_limit(std::span<const Sample> samples) {
  const std::size_t n = samples.size();
  if (n < 3) throw InsufficientData("epsilon_limit needs at least 3 samples");
  for (std::size_t i = 0; i < n; ++i) {
    if (!(samples[i].epsilon > 0.0))
      throw DomainError("sample widths must be positive");
    if (i > 0 && !(samples[i].epsilon < samples[i - 1].epsilon))
      throw DomainError("sample widths must be strictly decreasing");
  }

  const Sample& s1 = samples[n - 3];
  const Sample& s2 = samples[n - 2];
  const Sample& s3 = samples[n - 1];
  const auto fit = fit_three(s1, s2, s3);

  // samples that are pure cancellation noise carry a zero limit
  if (std::abs(s1.value) <= noise_floor(s1) &&
      std::abs(s2.value) <= noise_floor(s2) &&
      std::abs(s3.value) <= noise_floor(s3)) {
    return {s3.value, std::numeric_limits<double>::infinity(),
            std::max({noise_floor(s1), noise_floor(s2), noise_floor(s3)}),
            false};
  }

  // divergence: magnitudes grow and the growth ratio does not settle
  const double r = s3.epsilon / s2.epsilon;
  if (std::abs(s3.value) > std::abs(s2.value) &&
      std::abs(s2.value) > std::abs(s1.value) &&
      std::abs(s3.value / s2.value) >= 1.0 / std::sqrt(r)) {
    return {kNaN, fit ? fit->order : kNaN, std::abs(s3.value - s2.value),
            true};
  }

  const double last_step = std::abs(s3.value - s2.value);
  if (!fit) return {s3.value, kNaN, last_step, false};
  if (fit->roundoff) return {fit->limit, fit->order, last_step, false};
  if (!(fit->order > 0.0)) return {s3.value, fit->order, last_step, false};

  LimitEstimate out{fit->limit, fit->order, 0.0, false};
  if (n < 4) {
    out.residual = std::abs(fit->coeff * std::pow(s3.epsilon, fit->order));
    return out;
  }
  const auto prev = fit_three(samples[n - 4], s1, s2);
  out.residual = prev ? std::abs(fit->limit - prev->limit)
                      : std::abs(fit->coeff * std::pow(s3.epsilon, fit->order));

  if (n >= 5 && prev && !prev->roundoff) {
    if (const auto refined = richardson_refine(samples, fit->order)) {
      if (refined->residual <= out.residual) {
        out.value = refined->value;
        out.residual = refined->residual;
      }
      return out;
    }
    const auto prev2 = fit_three(samples[n - 5], samples[n - 4], s1);
    if (prev2 && !prev2->roundoff) {
      const Sample l1{s1.epsilon, prev2->limit};
      const Sample l2{s2.epsilon, prev->limit};
      const Sample l3{s3.epsilon, fit->limit};
      const auto second = fit_three(l1, l2, l3);
      if (second && !second->roundoff && second->order > fit->order + 0.5 &&
          std::abs(second->limit - fit->limit) <= out.residual) {
        out.residual = std::abs(second->limit - fit->limit);
        out.value = second->limit;
      }
    }
  }
  return out;
}

double integrate_weighted(const Integrand& f,
                          const std::function<double(double)>& weight,
                          Window window, std::vector<double> breakpoints,
                          double tol) {
  return integrate_weighted_result(f, weight, window, std::move(breakpoints),
                                   tol)
      .value;
}

QuadratureResult integrate_weighted_result(
    const Integrand& f, const std::function<double(double)>& weight,
    Window window, std::vector<double> breakpoints, double tol) {
  if (!(window.lo < window.hi)) throw DomainError("empty integration window");
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  const QuadratureOptions options{tol, 0.0, 20000};
  std::vector<double> cuts;

  if (window.lo == -window.hi) {
    const double start = f.singular_origin ? kOriginPuncture : 0.0;
    cuts.push_back(start);
    for (double b : breakpoints) {
      const double m = std::abs(b);
      if (m > start && m < window.hi) cuts.push_back(m);
    }
    cuts.push_back(window.hi);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    auto folded = [&](double z) {
      return f(z) * weight(z) + f(-z) * weight(-z);
    };
    return integrate(folded, cuts, options);
  }

  cuts = {window.lo, window.hi};
  const bool origin_inside = window.lo < 0.0 && window.hi > 0.0;
  if (origin_inside) {
    if (f.singular_origin) {
      cuts.push_back(-kOriginPuncture);
      cuts.push_back(kOriginPuncture);
    } else {
      cuts.push_back(0.0);
    }
  }
  for (double b : breakpoints)
    if (b > window.lo && b < window.hi) cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  auto plain = [&](double z) {
    if (f.singular_origin && std::abs(z) < kOriginPuncture) return 0.0;
    return f(z) * weight(z);
  };
  return integrate(plain, cuts, options);
}

double integrate_against(const Integrand& f, const DeltaKerneld& kernel,
                         Window window, double tol, int order) {
  detail::check_order(kernel.kind(), order);
  if (!(window.lo <= 0.0 && window.hi >= 0.0))
    throw DomainError("integration window must contain the origin");
  const double eps = kernel.width();
  std::vector<double> breaks;
  switch (kernel.kind()) {
    case KernelKind::Box:
      window = {std::max(window.lo, -eps), std::min(window.hi, eps)};
      break;
    case KernelKind::Gaussian:
      breaks = {-12 * eps, -8 * eps, -4 * eps, -eps, eps, 4 * eps, 8 * eps, 12 * eps};
      break;
    case KernelKind::Lorentzian:
      breaks = {-100 * eps, -10 * eps, -eps, eps, 10 * eps, 100 * eps};
      break;
    case KernelKind::Sinc: {
      const double spacing = std::numbers::pi * eps;  // pi / K
      const double reach = std::max(-window.lo, window.hi);
      const auto count = static_cast<long>(reach / spacing);
      if (count > 200000)
        throw DomainError("sinc window spans too many oscillations");
      for (long j = 1; j <= count; ++j) {
        breaks.push_back(j * spacing);
        breaks.push_back(-j * spacing);
      }
      break;
    }
  }
  auto weight = [&](double z) { return eval_kernel(kernel, z, order); };
  return integrate_weighted(f, weight, window, std::move(breaks), tol);
}

ActionKind ActionKind::derivative(int n) {
  if (n < 1 || n > kMaxDerivativeOrder)
    throw UnsupportedDerivative("derivative action order must lie in [1, 4]");
  return {ActionVariant::Derivative, n};
}

double fourier_window(double first_cutoff) {
  if (!(first_cutoff > 0.0)) throw DomainError("cutoff must be positive");
  const double period = 2.0 * std::numbers::pi;
  const double turns = std::max(1.0, std::ceil(first_cutoff / period));
  return period * turns / first_cutoff;
}

std::vector<Sample> action_samples(const Integrand& f, ActionKind kind,
                                   KernelKind family,
                                   const EpsilonSchedule& schedule,
                                   double tol) {
  if (kind.variant == ActionVariant::Derivative &&
      (kind.order < 1 || kind.order > kMaxDerivativeOrder))
    throw UnsupportedDerivative("derivative action order must lie in [1, 4]");
  if (kind.variant == ActionVariant::Derivative &&
      (family == KernelKind::Box || family == KernelKind::Sinc))
    throw UnsupportedDerivative(std::string("derivative action unsupported "
                                            "for the ") +
                                to_string(family) + " family");

  if (kind.variant == ActionVariant::Fourier ||
      (kind.variant == ActionVariant::Delta && family == KernelKind::Sinc))
    family = KernelKind::Sinc;

  Integrand integrand = f;
  if (kind.variant == ActionVariant::Moment)
    integrand.fn = [g = f.fn](double z) { return g(z) * z; };
  const int order =
      kind.variant == ActionVariant::Derivative ? kind.order : 0;

  const double fourier_half = fourier_window(1.0 / schedule.start());
  std::vector<Sample> out;
  for (double eps : schedule.values()) {
    const DeltaKerneld kernel(family, eps);
    double value = 0.0;
    switch (family) {
      case KernelKind::Gaussian: {
        const double w = kGaussianWindowWidths * schedule.largest();
        value = integrate_against(integrand, kernel, {-w, w}, tol, order);
        break;
      }
      case KernelKind::Box:
        value = integrate_against(integrand, kernel, {-eps, eps}, tol);
        break;
      case KernelKind::Lorentzian: {
        const double w = kLorentzianWindow;
        value = integrate_against(integrand, kernel, {-w, w}, tol, order) /
                kernel_mass(kernel, -w, w);
        break;
      }
      case KernelKind::Sinc:
        value = integrate_against(integrand, kernel,
                                  {-fourier_half, fourier_half}, tol);
        break;
    }
    out.push_back({eps, value});
  }
  return out;
}

LimitEstimate distribution_action(const Integrand& f, ActionKind kind,
                                  KernelKind family,
                                  const EpsilonSchedule& schedule,
                                  double tol) {
  const auto samples = action_samples(f, kind, family, schedule, tol);
  return epsilon_limit(samples);
}

}  // namespace improper
