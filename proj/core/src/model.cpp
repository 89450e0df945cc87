#include "omcomb/model.hpp"

#include <cmath>

namespace omcomb {

SystemParams baseline_params() {
  SystemParams p;
  p.omega_b = Frequency::hertz(51.8e6);
  p.kappa = Frequency::hertz(15e6);
  p.gamma = Frequency::hertz(41e3);
  p.g = Frequency::hertz(1e3);
  p.delta_a = p.omega_b;
  p.eps_c = Amplitude::giga(3e3);
  p.eps_p = Amplitude::giga(0.0);
  p.eps_f = Amplitude::giga(0.0);
  p.n = 1;
  return p;
}

namespace {

void require_finite(double v, const char* field) {
  if (!std::isfinite(v)) throw ParamError(field, "must be finite");
}

void require_positive(double v, const char* field) {
  require_finite(v, field);
  if (!(v > 0.0)) throw ParamError(field, "must be > 0");
}

void require_non_negative(double v, const char* field) {
  require_finite(v, field);
  if (!(v >= 0.0)) throw ParamError(field, "must be >= 0");
}

}  // namespace

const SystemParams& validate(const SystemParams& p) {
  require_positive(p.omega_b.hz(), "omega_b");
  require_positive(p.kappa.hz(), "kappa");
  require_positive(p.gamma.hz(), "gamma");
  require_non_negative(p.g.hz(), "g");
  require_finite(p.delta_a.hz(), "delta_a");
  require_non_negative(p.eps_c.giga(), "eps_c");
  require_non_negative(p.eps_p.giga(), "eps_p");
  require_non_negative(p.eps_f.giga(), "eps_f");
  if (p.delta_p) require_finite(p.delta_p->hz(), "delta_p");
  if (p.n < 1) throw ParamError("n", "must be an integer >= 1");
  require_finite(p.phase_c, "phase_c");
  require_finite(p.phase_p, "phase_p");
  require_finite(p.phase_f, "phase_f");
  return p;
}

double zero_point_fluctuation(const PhysicalCavity& cav, Frequency omega_b) {
  require_positive(cav.mass, "mass");
  require_positive(omega_b.hz(), "omega_b");
  return std::sqrt(constants::hbar / (2.0 * cav.mass * omega_b.rad_per_s()));
}

Frequency derive_coupling(const PhysicalCavity& cav, Frequency omega_b) {
  require_positive(cav.length, "length");
  require_positive(cav.lambda_c, "lambda_c");
  const double omega_a = constants::two_pi * constants::speed_of_light / cav.lambda_c;
  return Frequency::angular(zero_point_fluctuation(cav, omega_b) * omega_a / cav.length);
}

Amplitude power_to_amplitude(double power_watts, Frequency omega_y, Frequency kappa) {
  require_non_negative(power_watts, "power");
  require_positive(omega_y.hz(), "omega_y");
  require_positive(kappa.hz(), "kappa");
  return Amplitude::per_second(
      std::sqrt(2.0 * kappa.rad_per_s() * power_watts / (constants::hbar * omega_y.rad_per_s())));
}

}  // namespace omcomb
