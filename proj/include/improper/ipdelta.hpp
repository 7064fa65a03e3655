#pragma once

// Infeld-Plebanski "good functions": delta-like kernels that assign a
// prescribed finite value omega_k to integrals against |zeta|^-k.
//
//   delta_IP(eps, zeta)     = alpha(eps) |zeta|^k d/dzeta (zeta delta(eps, zeta))
//                           = alpha(eps) |zeta|^k (1 - zeta^2/eps^2) delta(eps, zeta)
//   hat delta_IP(eps, zeta) = (1 + omega_k |zeta|^k) delta_IP(eps, zeta)
//
// with a Gaussian base kernel delta(eps, zeta).

#include "improper/distint.hpp"

namespace improper {

enum class AlphaMode {
  Numeric,        ///< alpha enforcing int delta_IP = 1, by quadrature
  ClosedForm,  ///< eps^-k sqrt(pi) / (2^((k+1)/2) Gamma((k+1)/2))
};

/// Normalisation constant alpha(k, eps). Numeric mode integrates the alpha = 1
/// profile once; the result scales exactly as eps^-k.
double ip_alpha(int k, double epsilon, AlphaMode mode);

class IPKernel {
 public:
  IPKernel(int k, double omega, double epsilon,
           AlphaMode mode = AlphaMode::Numeric);

  int k() const { return k_; }
  double omega() const { return omega_; }
  double epsilon() const { return base_.width(); }
  const DeltaKerneld& base() const { return base_; }
  double alpha() const { return alpha_; }
  AlphaMode alpha_mode() const { return mode_; }

 private:
  int k_;
  double omega_;
  DeltaKerneld base_;
  AlphaMode mode_;
  double alpha_;
};

/// delta_IP (hatted = false) or hat delta_IP (hatted = true) at zeta.
double eval_ip_kernel(const IPKernel& ip, double zeta, bool hatted);

/// int psi(zeta) hat delta_IP(eps, zeta) dzeta at every scheduled width,
/// Numeric alpha. `singularity_order` is the caller-declared order j of the
/// |zeta|^-j singularity of psi (0 for continuous psi); j > k is rejected.
std::vector<Sample> ip_action_samples(const Integrand& psi, int k,
                                      double omega,
                                      const EpsilonSchedule& schedule,
                                      int singularity_order = 0,
                                      double tol = 1e-15);

LimitEstimate ip_action(const Integrand& psi, int k, double omega,
                        const EpsilonSchedule& schedule,
                        int singularity_order = 0, double tol = 1e-15);

/// The tilde value phi~(0): phi evaluated at its singular point with the
/// |zeta|^-k singular part replaced by omega_k. Throws DivergenceError when
/// the limit does not exist.
double ip_smooth(const Integrand& phi, int k, double omega,
                 const EpsilonSchedule& schedule, int singularity_order = 0,
                 double tol = 1e-15);

/// int delta_IP(eps, zeta) / |zeta|^k dzeta by quadrature; zero at every eps
/// because the integrand is a total derivative.
double ip_singular_moment(int k, double epsilon, double tol = 1e-15);

}  // namespace improper
