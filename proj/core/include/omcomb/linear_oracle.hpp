#pragma once

#include <complex>

#include "omcomb/model.hpp"

namespace omcomb {

/// First-order response to a weak probe at detuning delta about the
/// probe-free steady state:
///   alpha = alpha0 + a_plus e^{-i delta t} + a_minus e^{+i delta t}
///   beta  = beta0  + b_plus e^{-i delta t} + b_minus e^{+i delta t}
struct LinearResponse {
  double delta = 0.0;  ///< rad/s
  std::complex<double> a_plus;
  std::complex<double> a_minus;
  std::complex<double> b_plus;
  std::complex<double> b_minus;
  double residual = 0.0;  ///< relative residual of the solved 4x4 system

  /// Output-field coefficient at e^{-i delta t}: eps_probe - sqrt(2 kappa) a_plus.
  std::complex<double> out_plus(const SystemParams& p, std::complex<double> eps_probe) const;
  /// Output-field coefficient at e^{+i delta t}.
  std::complex<double> out_minus(const SystemParams& p) const;
};

/// Solves the linearised equations for the unknowns (a_plus, conj(a_minus),
/// b_plus, conj(b_minus)). Requires the vacuum steady branch to be stable;
/// throws std::domain_error otherwise or when the system is singular.
LinearResponse linear_response(const SystemParams& p, double delta_rad,
                               std::complex<double> eps_probe);

struct TwoProbeResponse {
  LinearResponse probe_p;  ///< at delta_p
  LinearResponse probe_f;  ///< at omega_b / n
  /// Set when eps_p/eps_c or eps_f/eps_c exceeds 1e-2.
  bool outside_weak_regime = false;
};

/// Independent first-order responses at the two probe detunings. Probe
/// mixing is second order and is not included.
TwoProbeResponse two_probe_linear_response(const SystemParams& p);

}  // namespace omcomb
