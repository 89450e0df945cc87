#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "omcomb/model.hpp"

namespace omcomb {

using Complex = std::complex<double>;

/// Mean-field cavity amplitude alpha and mechanical amplitude beta at time t.
struct FieldState {
  Complex alpha;
  Complex beta;
  double t = 0.0;

  friend bool operator==(const FieldState&, const FieldState&) = default;
};

struct FieldRates {
  Complex dalpha;
  Complex dbeta;
};

/// Uniformly sampled states at t0 + i*dt.
struct Trajectory {
  double t0 = 0.0;
  double dt = 0.0;
  std::vector<FieldState> samples;

  std::size_t size() const { return samples.size(); }
  double time(std::size_t i) const { return t0 + static_cast<double>(i) * dt; }
};

class DivergenceError : public std::runtime_error {
 public:
  explicit DivergenceError(double t)
      : std::runtime_error("integration diverged (non-finite state) at t = " + std::to_string(t)),
        time_(t) {}
  double time() const noexcept { return time_; }

 private:
  double time_;
};

inline constexpr int kDefaultStepsPerPeriod = 200;
inline constexpr double kDefaultSettlePeriods = 20.0;
/// dt * omega_b must stay below this.
inline constexpr double kResolutionGuard = 0.1;

/// Right-hand sides of the mean-field equations with all rates pre-converted
/// to rad/s:
///   dalpha/dt = -(i delta_a + kappa) alpha - i g alpha (beta + beta*)
///               + eps_c + eps_p e^{-i delta_p t} + eps_f e^{-i delta_f t}
///   dbeta/dt  = -(i omega_b + gamma) beta - i g |alpha|^2
class MeanFieldEquations {
 public:
  explicit MeanFieldEquations(const SystemParams& p);

  FieldRates operator()(Complex alpha, Complex beta, double t) const {
    const Complex drive = eps_c_ + eps_p_ * std::polar(1.0, -delta_p_ * t) +
                          eps_f_ * std::polar(1.0, -delta_f_ * t);
    const double two_re_beta = 2.0 * beta.real();
    const double intensity = std::norm(alpha);
    return {cavity_decay_ * alpha - Complex(0.0, g_ * two_re_beta) * alpha + drive,
            mech_decay_ * beta - Complex(0.0, g_ * intensity)};
  }

 private:
  Complex cavity_decay_;
  Complex mech_decay_;
  double g_;
  Complex eps_c_, eps_p_, eps_f_;
  double delta_p_, delta_f_;
};

FieldRates rhs(const FieldState& state, double t, const SystemParams& p);

/// One classical RK4 step of size dt from (state, t).
FieldState rk4_step(const MeanFieldEquations& eq, const FieldState& state, double dt);

/// Step size giving steps_per_period steps per mechanical period 2 pi/omega_b.
double step_for(const SystemParams& p, int steps_per_period);

/// Fixed-step RK4 from init (at init.t) over `total_steps` steps of size dt.
/// States at step indices >= record_from_step are recorded, including the
/// final one.
Trajectory integrate_steps(const SystemParams& p, const FieldState& init, double dt,
                           long long total_steps, long long record_from_step);

/// Fixed-step RK4 from init.t to t_end (snapped to the dt grid). Samples with
/// t >= record_from are kept. Throws DivergenceError on a non-finite state
/// and std::invalid_argument for a bad step or window.
Trajectory integrate(const SystemParams& p, const FieldState& init, double t_end, double dt,
                     double record_from);

/// Number of steps used to remove transients: settle_periods / gamma,
/// rounded up to a whole number of fundamental periods.
long long settle_steps(const SystemParams& p, double settle_periods, int steps_per_period);

/// Integrates from vacuum for settle_periods / gamma and returns the final
/// state. Recording should continue from the returned state's time.
FieldState settle(const SystemParams& p, double settle_periods = kDefaultSettlePeriods,
                  int steps_per_period = kDefaultStepsPerPeriod);

}  // namespace omcomb
