#pragma once

#include <compare>
#include <numbers>

namespace omcomb {

namespace constants {
inline constexpr double hbar = 1.054571817e-34;      // J s
inline constexpr double speed_of_light = 2.99792458e8;  // m/s
inline constexpr double two_pi = 2.0 * std::numbers::pi;
}  // namespace constants

// A rate or frequency stored as ordinary frequency in Hz. Config files carry
// Hz; the equations of motion consume the angular value 2*pi*hz.
class Frequency {
 public:
  constexpr Frequency() = default;

  static constexpr Frequency hertz(double hz) { return Frequency{hz}; }
  static constexpr Frequency angular(double rad_per_s) {
    return Frequency{rad_per_s / constants::two_pi};
  }

  constexpr double hz() const { return hz_; }
  constexpr double rad_per_s() const { return constants::two_pi * hz_; }

  friend constexpr auto operator<=>(const Frequency&, const Frequency&) = default;

 private:
  constexpr explicit Frequency(double hz) : hz_(hz) {}
  double hz_ = 0.0;
};

// Drive amplitude epsilon in s^-1 (photon-flux amplitude). Quoted in units of
// 1e9 s^-1 ("GHz") without a 2*pi factor.
class Amplitude {
 public:
  static constexpr double kGiga = 1e9;

  constexpr Amplitude() = default;

  static constexpr Amplitude giga(double v) { return Amplitude{v}; }
  static constexpr Amplitude per_second(double v) { return Amplitude{v / kGiga}; }

  constexpr double giga() const { return giga_; }
  constexpr double per_second() const { return giga_ * kGiga; }

  friend constexpr auto operator<=>(const Amplitude&, const Amplitude&) = default;

 private:
  constexpr explicit Amplitude(double g) : giga_(g) {}
  double giga_ = 0.0;
};

}  // namespace omcomb
