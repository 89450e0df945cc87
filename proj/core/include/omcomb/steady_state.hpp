#pragma once

#include <array>
#include <complex>
#include <vector>

#include "omcomb/model.hpp"

namespace omcomb {

/// Time-independent solution of the mean-field equations with both probes off.
struct SteadyBranch {
  std::complex<double> alpha0;
  std::complex<double> beta0;
  double intensity = 0.0;  ///< |alpha0|^2
  bool stable = false;
  double max_growth_rate = 0.0;  ///< largest real part of the Jacobian spectrum, 1/s
};

/// Coefficients {c3, c2, c1, c0} of the bistability cubic in x = |alpha0|^2:
///   x [ (delta_a - s x)^2 + kappa^2 ] = eps_c^2,  s = 2 g^2 omega_b / (gamma^2 + omega_b^2)
std::array<double, 4> bistability_cubic(const SystemParams& p);

/// Real 4x4 Jacobian of the probe-free equations in (Re a, Im a, Re b, Im b).
std::array<std::array<double, 4>, 4> steady_jacobian(const SystemParams& p,
                                                     std::complex<double> alpha,
                                                     std::complex<double> beta);

/// All non-negative real roots of the cubic, ascending in intensity, each
/// polished by Newton and classified by the eigenvalues of its Jacobian.
std::vector<SteadyBranch> solve_steady(const SystemParams& p);

/// Lowest-intensity branch, the one reached from vacuum for the figure
/// parameter sets.
SteadyBranch vacuum_branch(const SystemParams& p);

/// Max-norm of both right-hand sides at (alpha0, beta0) with probes off.
double steady_residual(const SystemParams& p, std::complex<double> alpha0,
                       std::complex<double> beta0);

}  // namespace omcomb
