#include "omcomb/dynamics.hpp"

#include <algorithm>
#include <cmath>

namespace omcomb {

MeanFieldEquations::MeanFieldEquations(const SystemParams& p)
    : cavity_decay_(-p.kappa.rad_per_s(), -p.delta_a.rad_per_s()),
      mech_decay_(-p.gamma.rad_per_s(), -p.omega_b.rad_per_s()),
      g_(p.g.rad_per_s()),
      eps_c_(std::polar(p.eps_c.per_second(), p.phase_c)),
      eps_p_(std::polar(p.eps_p.per_second(), p.phase_p)),
      eps_f_(std::polar(p.eps_f.per_second(), p.phase_f)),
      delta_p_(p.probe_p_detuning().rad_per_s()),
      delta_f_(p.probe_f_detuning_rad()) {}

FieldRates rhs(const FieldState& state, double t, const SystemParams& p) {
  return MeanFieldEquations(p)(state.alpha, state.beta, t);
}

FieldState rk4_step(const MeanFieldEquations& eq, const FieldState& s, double dt) {
  const double half = 0.5 * dt;
  const FieldRates k1 = eq(s.alpha, s.beta, s.t);
  const FieldRates k2 = eq(s.alpha + half * k1.dalpha, s.beta + half * k1.dbeta, s.t + half);
  const FieldRates k3 = eq(s.alpha + half * k2.dalpha, s.beta + half * k2.dbeta, s.t + half);
  const FieldRates k4 = eq(s.alpha + dt * k3.dalpha, s.beta + dt * k3.dbeta, s.t + dt);
  const double w = dt / 6.0;
  return {s.alpha + w * (k1.dalpha + 2.0 * k2.dalpha + 2.0 * k3.dalpha + k4.dalpha),
          s.beta + w * (k1.dbeta + 2.0 * k2.dbeta + 2.0 * k3.dbeta + k4.dbeta), s.t + dt};
}

double step_for(const SystemParams& p, int steps_per_period) {
  if (steps_per_period <= 0) throw std::invalid_argument("steps_per_period must be > 0");
  return 1.0 / (p.omega_b.hz() * steps_per_period);
}

namespace {

bool finite(const FieldState& s) {
  return std::isfinite(s.alpha.real()) && std::isfinite(s.alpha.imag()) &&
         std::isfinite(s.beta.real()) && std::isfinite(s.beta.imag());
}

void check_step(const SystemParams& p, double dt) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw std::invalid_argument("dt must be > 0");
  if (dt * p.omega_b.rad_per_s() >= kResolutionGuard)
    throw std::invalid_argument("dt * omega_b must be < 0.1");
}

}  // namespace

Trajectory integrate_steps(const SystemParams& p, const FieldState& init, double dt,
                           long long total_steps, long long record_from_step) {
  validate(p);
  check_step(p, dt);
  if (total_steps < 0 || record_from_step < 0 || record_from_step > total_steps)
    throw std::invalid_argument("record window must lie inside the integration span");

  const MeanFieldEquations eq(p);
  Trajectory traj;
  traj.t0 = init.t + static_cast<double>(record_from_step) * dt;
  traj.dt = dt;
  traj.samples.reserve(static_cast<std::size_t>(total_steps - record_from_step + 1));

  FieldState s = init;
  if (!finite(s)) throw DivergenceError(s.t);
  for (long long i = 0;; ++i) {
    // Times come from the step index so they never drift.
    s.t = init.t + static_cast<double>(i) * dt;
    if (i >= record_from_step) traj.samples.push_back(s);
    if (i == total_steps) break;
    s = rk4_step(eq, s, dt);
    if (!finite(s)) throw DivergenceError(init.t + static_cast<double>(i + 1) * dt);
  }
  return traj;
}

Trajectory integrate(const SystemParams& p, const FieldState& init, double t_end, double dt,
                     double record_from) {
  check_step(p, dt);
  if (!(record_from <= t_end)) throw std::invalid_argument("record_from must be <= t_end");
  if (!(t_end >= init.t)) throw std::invalid_argument("t_end must be >= initial time");
  const auto total = std::llround((t_end - init.t) / dt);
  const double first = std::ceil((record_from - init.t) / dt - 1e-9);
  const long long from = first < 0.0 ? 0 : static_cast<long long>(first);
  return integrate_steps(p, init, dt, total, std::min<long long>(from, total));
}

long long settle_steps(const SystemParams& p, double settle_periods, int steps_per_period) {
  if (!(settle_periods >= 0.0)) throw std::invalid_argument("settle_periods must be >= 0");
  const double dt = step_for(p, steps_per_period);
  const long long per_fundamental = static_cast<long long>(p.n) * steps_per_period;
  const double raw = settle_periods / p.gamma.rad_per_s() / dt;
  const auto periods = static_cast<long long>(std::ceil(raw / static_cast<double>(per_fundamental)));
  return periods * per_fundamental;
}

FieldState settle(const SystemParams& p, double settle_periods, int steps_per_period) {
  const double dt = step_for(p, steps_per_period);
  const long long steps = settle_steps(p, settle_periods, steps_per_period);
  const Trajectory tail = integrate_steps(p, FieldState{}, dt, steps, steps);
  return tail.samples.back();
}

}  // namespace omcomb
