#include "omcomb/linear_oracle.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

#include "omcomb/steady_state.hpp"

namespace omcomb {

using Complex = std::complex<double>;

Complex LinearResponse::out_plus(const SystemParams& p, Complex eps_probe) const {
  return eps_probe - std::sqrt(2.0 * p.kappa.rad_per_s()) * a_plus;
}

Complex LinearResponse::out_minus(const SystemParams& p) const {
  return -std::sqrt(2.0 * p.kappa.rad_per_s()) * a_minus;
}

LinearResponse linear_response(const SystemParams& p, double delta_rad, Complex eps_probe) {
  const SteadyBranch br = vacuum_branch(p);
  if (!br.stable) throw std::domain_error("vacuum steady branch is unstable; no linear response");

  const Complex i(0.0, 1.0);
  const double k = p.kappa.rad_per_s();
  const double gm = p.gamma.rad_per_s();
  const double wb = p.omega_b.rad_per_s();
  const double g = p.g.rad_per_s();
  const double d_eff = p.delta_a.rad_per_s() + 2.0 * g * br.beta0.real();
  const Complex a0 = br.alpha0;

  // Linearised generator acting on (d_alpha, d_alpha*, d_beta, d_beta*).
  Eigen::Matrix4cd gen;
  gen << -(i * d_eff + k), 0.0, -i * g * a0, -i * g * a0,
         0.0, -(-i * d_eff + k), i * g * std::conj(a0), i * g * std::conj(a0),
         -i * g * std::conj(a0), -i * g * a0, -(i * wb + gm), 0.0,
         i * g * std::conj(a0), i * g * a0, 0.0, -(-i * wb + gm);

  // The e^{-i delta t} component x satisfies (-i delta - gen) x = f.
  const Eigen::Matrix4cd sys = -i * delta_rad * Eigen::Matrix4cd::Identity() - gen;
  Eigen::Vector4cd f = Eigen::Vector4cd::Zero();
  f(0) = eps_probe;

  const Eigen::FullPivLU<Eigen::Matrix4cd> lu(sys);
  if (!lu.isInvertible()) throw std::domain_error("linearised system is singular");
  const Eigen::Vector4cd x = lu.solve(f);

  LinearResponse r;
  r.delta = delta_rad;
  r.a_plus = x(0);
  r.a_minus = std::conj(x(1));
  r.b_plus = x(2);
  r.b_minus = std::conj(x(3));
  const double fn = f.norm();
  r.residual = fn == 0.0 ? (sys * x).norm() : (sys * x - f).norm() / fn;
  return r;
}

TwoProbeResponse two_probe_linear_response(const SystemParams& p) {
  TwoProbeResponse out;
  out.probe_p = linear_response(p, p.probe_p_detuning().rad_per_s(),
                                std::polar(p.eps_p.per_second(), p.phase_p));
  out.probe_f =
      linear_response(p, p.probe_f_detuning_rad(), std::polar(p.eps_f.per_second(), p.phase_f));
  const double ec = p.eps_c.per_second();
  out.outside_weak_regime =
      ec == 0.0 || p.eps_p.per_second() / ec > 1e-2 || p.eps_f.per_second() / ec > 1e-2;
  return out;
}

}  // namespace omcomb
