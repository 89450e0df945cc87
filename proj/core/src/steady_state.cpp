#include "omcomb/steady_state.hpp"

#include "omcomb/dynamics.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace omcomb {

namespace {

using Complex = std::complex<double>;

double spring_shift(const SystemParams& p) {
  const double g = p.g.rad_per_s();
  const double wb = p.omega_b.rad_per_s();
  const double gm = p.gamma.rad_per_s();
  return 2.0 * g * g * wb / (gm * gm + wb * wb);
}

// Real roots of y^3 + b y^2 + c y + d = 0.
std::vector<double> monic_cubic_roots(double b, double c, double d) {
  const double q = (b * b - 3.0 * c) / 9.0;
  const double r = (b * (2.0 * b * b - 9.0 * c) + 27.0 * d) / 54.0;
  const double q3 = q * q * q;
  const double shift = b / 3.0;
  if (r * r < q3) {
    const double theta = std::acos(std::clamp(r / std::sqrt(q3), -1.0, 1.0));
    const double m = -2.0 * std::sqrt(q);
    constexpr double turn = 2.0 * std::numbers::pi;
    return {m * std::cos(theta / 3.0) - shift, m * std::cos((theta + turn) / 3.0) - shift,
            m * std::cos((theta - turn) / 3.0) - shift};
  }
  const double a = -std::copysign(std::cbrt(std::abs(r) + std::sqrt(r * r - q3)), r);
  const double bb = (a == 0.0) ? 0.0 : q / a;
  return {a + bb - shift};
}

// Newton on f(y) = a3 y^3 + a2 y^2 + y - 1 to 1e-14 relative.
double polish(double y, double a3, double a2) {
  for (int it = 0; it < 100; ++it) {
    const double f = ((a3 * y + a2) * y + 1.0) * y - 1.0;
    const double df = (3.0 * a3 * y + 2.0 * a2) * y + 1.0;
    if (df == 0.0) break;
    const double step = f / df;
    y -= step;
    if (std::abs(step) <= 1e-14 * std::abs(y)) break;
  }
  return y;
}

SteadyBranch make_branch(const SystemParams& p, double intensity) {
  const double wb = p.omega_b.rad_per_s();
  const double gm = p.gamma.rad_per_s();
  const double g = p.g.rad_per_s();
  const double delta_eff = p.delta_a.rad_per_s() - spring_shift(p) * intensity;
  SteadyBranch br;
  br.alpha0 = std::polar(p.eps_c.per_second(), p.phase_c) / Complex(p.kappa.rad_per_s(), delta_eff);
  br.beta0 = Complex(0.0, -g * intensity) / Complex(gm, wb);
  br.intensity = intensity;

  const auto jac = steady_jacobian(p, br.alpha0, br.beta0);
  Eigen::Matrix4d m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = jac[i][j];
  const Eigen::EigenSolver<Eigen::Matrix4d> es(m, false);
  br.max_growth_rate = es.eigenvalues().real().maxCoeff();
  const double scale = std::max(p.kappa.rad_per_s(), gm);
  br.stable = br.max_growth_rate < -1e-12 * scale;
  return br;
}

}  // namespace

std::array<double, 4> bistability_cubic(const SystemParams& p) {
  const double s = spring_shift(p);
  const double d = p.delta_a.rad_per_s();
  const double k = p.kappa.rad_per_s();
  const double e = p.eps_c.per_second();
  return {s * s, -2.0 * d * s, d * d + k * k, -e * e};
}

std::array<std::array<double, 4>, 4> steady_jacobian(const SystemParams& p, Complex alpha,
                                                     Complex beta) {
  const double k = p.kappa.rad_per_s();
  const double gm = p.gamma.rad_per_s();
  const double wb = p.omega_b.rad_per_s();
  const double g = p.g.rad_per_s();
  const double x1 = alpha.real(), x2 = alpha.imag();
  const double d = p.delta_a.rad_per_s() + 2.0 * g * beta.real();
  return {{
      {-k, d, 2.0 * g * x2, 0.0},
      {-d, -k, -2.0 * g * x1, 0.0},
      {0.0, 0.0, -gm, wb},
      {-2.0 * g * x1, -2.0 * g * x2, -wb, -gm},
  }};
}

std::vector<SteadyBranch> solve_steady(const SystemParams& p) {
  validate(p);
  const double k = p.kappa.rad_per_s();
  const double d = p.delta_a.rad_per_s();
  const double e = p.eps_c.per_second();
  const double d2 = d * d + k * k;
  if (e == 0.0) return {make_branch(p, 0.0)};

  // Normalise by the uncoupled intensity: a3 y^3 + a2 y^2 + y - 1 = 0.
  const double x_lin = e * e / d2;
  const double u = spring_shift(p) * x_lin;
  const double a3 = u * u / d2;
  const double a2 = -2.0 * d * u / d2;

  std::vector<double> ys;
  if (a3 == 0.0) {
    ys.push_back(1.0);
  } else {
    for (double y : monic_cubic_roots(a2 / a3, 1.0 / a3, -1.0 / a3)) ys.push_back(polish(y, a3, a2));
  }
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end(),
                       [](double a, double b) { return std::abs(a - b) <= 1e-10 * std::abs(b); }),
           ys.end());

  std::vector<SteadyBranch> out;
  for (double y : ys)
    if (y >= 0.0) out.push_back(make_branch(p, y * x_lin));
  return out;
}

SteadyBranch vacuum_branch(const SystemParams& p) { return solve_steady(p).front(); }

double steady_residual(const SystemParams& p, Complex alpha0, Complex beta0) {
  SystemParams off = p;
  off.eps_p = Amplitude::giga(0.0);
  off.eps_f = Amplitude::giga(0.0);
  const FieldRates r = rhs(FieldState{alpha0, beta0, 0.0}, 0.0, off);
  return std::max(std::abs(r.dalpha), std::abs(r.dbeta));
}

}  // namespace omcomb
