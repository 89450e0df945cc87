#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "omcomb/units.hpp"

namespace omcomb {

class ParamError : public std::invalid_argument {
 public:
  ParamError(std::string field, const std::string& what)
      : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Parameters of a cavity optomechanical system driven by a control tone and
/// two probe tones, in the frame rotating at the control frequency.
///
/// The second probe sits at omega_b / n; only the integer n is stored so
/// that n * delta_f == omega_b holds exactly.
struct SystemParams {
  Frequency omega_b;  ///< mechanical frequency
  Frequency kappa;    ///< cavity amplitude damping
  Frequency gamma;    ///< mechanical amplitude damping
  Frequency g;        ///< single-photon coupling
  Frequency delta_a;  ///< cavity detuning omega_a - omega_c

  Amplitude eps_c;
  Amplitude eps_p;
  Amplitude eps_f;

  /// Probe-1 detuning omega_p - omega_c. Unset means omega_b.
  std::optional<Frequency> delta_p;

  int n = 1;

  /// Drive phases in radians at t = 0.
  double phase_c = 0.0;
  double phase_p = 0.0;
  double phase_f = 0.0;

  Frequency probe_p_detuning() const { return delta_p.value_or(omega_b); }
  /// omega_b / n in rad/s.
  double probe_f_detuning_rad() const { return omega_b.rad_per_s() / n; }
  /// Fundamental angular frequency of the three-tone drive, omega_b / n.
  double fundamental_rad() const { return omega_b.rad_per_s() / n; }
  /// Fundamental period T_f = 2 pi n / omega_b.
  double fundamental_period() const { return n / omega_b.hz(); }

  friend bool operator==(const SystemParams&, const SystemParams&) = default;
};

/// Parameter set used throughout the figure reproductions: omega_b/2pi =
/// 51.8 MHz, kappa/2pi = 15 MHz, gamma/2pi = 41 kHz, g/2pi = 1 kHz,
/// delta_a = omega_b, eps_c = 3000 GHz, both probes off.
SystemParams baseline_params();

/// Returns params unchanged or throws ParamError naming the first violated
/// invariant.
const SystemParams& validate(const SystemParams& params);

struct PhysicalCavity {
  double mass = 0.0;      // kg
  double length = 0.0;    // m
  double lambda_c = 0.0;  // m
};

/// x_zpf = sqrt(hbar / (2 M omega_b)), metres.
double zero_point_fluctuation(const PhysicalCavity& cav, Frequency omega_b);

/// g = x_zpf * omega_a / L with omega_a = 2 pi c / lambda_c.
Frequency derive_coupling(const PhysicalCavity& cav, Frequency omega_b);

/// eps = sqrt(2 kappa P / (hbar omega_y)).
Amplitude power_to_amplitude(double power_watts, Frequency omega_y, Frequency kappa);

}  // namespace omcomb
