#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "omcomb/config.hpp"
#include "omcomb/model.hpp"

using namespace omcomb;

namespace {

PhysicalCavity reference_cavity(double length) { return {20e-12, length, 795e-9}; }

}  // namespace

TEST(Model, BaselineIsValid) {
  const SystemParams p = baseline_params();
  EXPECT_NO_THROW(validate(p));
  EXPECT_DOUBLE_EQ(p.omega_b.hz(), 51.8e6);
  EXPECT_DOUBLE_EQ(p.gamma.hz(), 41e3);
  EXPECT_DOUBLE_EQ(p.kappa.hz(), 15e6);
  EXPECT_DOUBLE_EQ(p.g.hz(), 1e3);
  EXPECT_EQ(p.delta_a, p.omega_b);
  EXPECT_DOUBLE_EQ(p.eps_c.per_second(), 3e12);
  EXPECT_EQ(p.probe_p_detuning(), p.omega_b);
}

TEST(Model, RejectsZeroN) {
  SystemParams p = baseline_params();
  p.n = 0;
  try {
    validate(p);
    FAIL() << "n = 0 accepted";
  } catch (const ParamError& e) {
    EXPECT_EQ(e.field(), "n");
  }
}

TEST(Model, RejectsNegativeKappa) {
  SystemParams p = baseline_params();
  p.kappa = Frequency::angular(-1.0);
  try {
    validate(p);
    FAIL() << "negative kappa accepted";
  } catch (const ParamError& e) {
    EXPECT_EQ(e.field(), "kappa");
  }
}

TEST(Model, ReportsFirstViolation) {
  SystemParams p = baseline_params();
  p.omega_b = Frequency::hertz(0.0);
  p.gamma = Frequency::hertz(-3.0);
  try {
    validate(p);
    FAIL();
  } catch (const ParamError& e) {
    EXPECT_EQ(e.field(), "omega_b");
  }
  p = baseline_params();
  p.eps_f = Amplitude::giga(-1.0);
  EXPECT_THROW(validate(p), ParamError);
  p = baseline_params();
  p.g = Frequency::hertz(std::nan(""));
  EXPECT_THROW(validate(p), ParamError);
}

TEST(Model, FractionDetuningIsExact) {
  SystemParams p = baseline_params();
  for (int n : {1, 2, 3, 5, 7, 10}) {
    p.n = n;
    EXPECT_EQ(p.probe_f_detuning_rad() * n, p.omega_b.rad_per_s()) << n;
  }
}

TEST(Model, ZeroPointFluctuationMatchesFormula) {
  const auto wb = Frequency::hertz(51.8e6);
  const double x = zero_point_fluctuation(reference_cavity(34e-6), wb);
  // sqrt(hbar / (2 M omega_b)) evaluated at 30 digits
  EXPECT_NEAR(x / 9.00022301099053564670362862777e-17, 1.0, 1e-12);
}

TEST(Model, DeriveCouplingReferenceCavity) {
  const auto wb = Frequency::hertz(51.8e6);
  const Frequency g = derive_coupling(reference_cavity(34e-6), wb);
  // g / 2pi at L = 34 um: 998.2238 Hz (mpmath)
  EXPECT_NEAR(g.hz(), 998.223817614877, 1e-6);
  EXPECT_NEAR(g.hz() / 1e3, 1.0, 0.05);
}

TEST(Model, CouplingScalingLaws) {
  const auto wb = Frequency::hertz(51.8e6);
  const double g0 = derive_coupling(reference_cavity(34e-6), wb).hz();
  PhysicalCavity heavy = reference_cavity(34e-6);
  heavy.mass *= 4.0;
  EXPECT_NEAR(derive_coupling(heavy, wb).hz() / g0, 0.5, 1e-15);
  EXPECT_NEAR(derive_coupling(reference_cavity(68e-6), wb).hz() / g0, 0.5, 1e-15);
  // pure
  EXPECT_EQ(derive_coupling(reference_cavity(34e-6), wb), derive_coupling(reference_cavity(34e-6), wb));
}

TEST(Model, PowerToAmplitude) {
  const auto omega_y = Frequency::angular(constants::two_pi * constants::speed_of_light / 795e-9);
  const auto kappa = Frequency::hertz(15e6);
  EXPECT_EQ(power_to_amplitude(0.0, omega_y, kappa).per_second(), 0.0);
  const double e1 = power_to_amplitude(1e-3, omega_y, kappa).per_second();
  // sqrt(2 kappa P / (hbar omega)) at 30 digits
  EXPECT_NEAR(e1 / 868551870309.413872, 1.0, 1e-12);
  const double e4 = power_to_amplitude(4e-3, omega_y, kappa).per_second();
  EXPECT_NEAR(e4 / e1, 2.0, 1e-14);
  EXPECT_THROW(power_to_amplitude(-1.0, omega_y, kappa), ParamError);
}

TEST(Model, JsonRoundTripIsBitExact) {
  std::mt19937_64 rng(20261016);
  std::uniform_real_distribution<double> mant(0.1, 10.0);
  std::uniform_int_distribution<int> expo(-3, 9);
  std::uniform_int_distribution<int> nd(1, 40);
  const auto draw = [&] { return mant(rng) * std::pow(10.0, expo(rng)); };
  for (int trial = 0; trial < 200; ++trial) {
    SystemParams p;
    p.omega_b = Frequency::hertz(draw());
    p.kappa = Frequency::hertz(draw());
    p.gamma = Frequency::hertz(draw());
    p.g = Frequency::hertz(draw());
    p.delta_a = Frequency::hertz(-draw());
    p.eps_c = Amplitude::giga(draw());
    p.eps_p = Amplitude::giga(draw());
    p.eps_f = Amplitude::giga(draw());
    p.n = nd(rng);
    if (trial % 3 == 0) p.delta_p = Frequency::hertz(draw());
    if (trial % 5 == 0) p.phase_p = mant(rng);
    const SystemParams back = parse_params(to_json(p));
    ASSERT_EQ(back, p) << to_json(p);
  }
}
