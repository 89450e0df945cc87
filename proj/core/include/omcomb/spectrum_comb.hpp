#pragma once

#include <complex>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include "omcomb/dynamics.hpp"
#include "omcomb/model.hpp"

namespace omcomb {

enum class LineKind { Control, IntegerOrder, FractionOrder, Sum, Difference };

std::string_view to_string(LineKind kind);

/// |k| = j n + r (sum) or |k| = j n - r (difference), j >= 1, 1 <= r <= n-1.
struct MixingOrder {
  int j = 0;
  int r = 0;
  friend bool operator==(const MixingOrder&, const MixingOrder&) = default;
};

struct LineClass {
  LineKind kind = LineKind::Control;
  /// Order k/n in units of omega_b.
  int order_num = 0;
  int order_den = 1;
  /// Both mixing readings of a sum/difference line.
  std::optional<MixingOrder> as_sum;
  std::optional<MixingOrder> as_difference;
};

/// Tag harmonic k of omega_b/n. Multiples of n are integer orders, |k| < n
/// fraction orders, the rest sum or difference lines decomposed around the
/// nearest integer order (ties go to sum).
LineClass classify_line(int k, int n);

/// Bit flags for drive tones landing on a comb line.
enum DriveTone : unsigned {
  kNoDrive = 0,
  kControlDrive = 1u << 0,
  kProbePDrive = 1u << 1,
  kProbeFDrive = 1u << 2,
};

struct CombLine {
  int k = 0;  ///< frequency k * omega_b / n relative to omega_c
  std::complex<double> amp_alpha;
  std::complex<double> amp_out;
  LineKind kind = LineKind::Control;
  unsigned drives = kNoDrive;
};

struct CombSpectrum {
  int n = 1;
  double omega_fund = 0.0;  ///< rad/s
  std::vector<CombLine> lines;  ///< one per k in [-k_max, k_max], ascending
  /// |projection| of the off-grid residual at the irrational test frequency.
  double leakage_floor = 0.0;
  /// Time average of |alpha|^2 over the window.
  double mean_intensity = 0.0;

  int k_max() const { return lines.empty() ? -1 : lines.back().k; }
  const CombLine& at(int k) const;
  double max_abs_alpha() const;
  double max_abs_out() const;
  /// |sum_k |amp_alpha|^2 - mean_intensity| / mean_intensity.
  double parseval_defect() const;
  /// leakage_floor / max |amp_alpha|.
  double relative_leakage() const;
};

class WindowError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kDefaultRecordPeriods = 4;
/// Default harmonic cutoff is kDefaultOrderSpan * n.
inline constexpr int kDefaultOrderSpan = 12;

/// Exact projection amp(k) = (1/T) int alpha(t) e^{+i k omega_b t / n} dt
/// over a window of whole fundamental periods 2 pi n / omega_b. A half-open
/// window (N = m P samples) uses the rectangle rule, a closed one (m P + 1)
/// the trapezoid rule. Anything else throws WindowError.
CombSpectrum project_harmonics(const Trajectory& traj, const SystemParams& p, int k_max);

/// The same amplitudes read off an FFT of the half-open window.
std::vector<std::complex<double>> fft_harmonics(const Trajectory& traj, const SystemParams& p,
                                                int k_max);

/// Harmonic index of the probe-p tone; throws if delta_p is off the comb grid.
int probe_p_harmonic(const SystemParams& p);

/// amp_out(k) = drive(k) - sqrt(2 kappa) amp_alpha(k).
CombSpectrum output_spectrum(CombSpectrum comb, const SystemParams& p);

struct SidebandOrder {
  int num = 0;
  int den = 1;
  double value() const { return static_cast<double>(num) / den; }
};

struct CombMetrics {
  double threshold = 0.0;  ///< relative amplitude criterion
  double max_abs_out = 0.0;
  std::vector<int> present;  ///< harmonics with |amp_out| >= threshold * max
  SidebandOrder cutoff_pos;  ///< outermost present line, units of omega_b
  SidebandOrder cutoff_neg;
  int rep_step = 0;          ///< smallest gap in k between present lines
  double f_rep = 0.0;        ///< rad/s
  int span_lo = 0;           ///< equally spaced run of present lines through the anchor
  int span_hi = 0;
  std::pair<double, double> f_range;  ///< (span_lo, span_hi) * omega_b / n, rad/s

  double range_lo_orders(int n) const { return static_cast<double>(span_lo) / n; }
  double range_hi_orders(int n) const { return static_cast<double>(span_hi) / n; }
};

/// Presence threshold for comb lines relative to the strongest output line,
/// -190 dB in amplitude.
inline constexpr double kDefaultThresholdRel = 3.1622776601683794e-10;

class EmptySpectrumError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Presence, cutoffs, repetition frequency and comb span of an output spectrum.
/// The span starts at the carrier (or the strongest line if the carrier is
/// absent) and grows outward in steps of rep_step while lines stay present.
CombMetrics comb_metrics(const CombSpectrum& comb, double threshold_rel = kDefaultThresholdRel);

/// Columns: k,order_num,order_den,freq_hz,re_out,im_out,abs_out,abs_out_db,kind
void write_spectrum_csv(std::ostream& os, const CombSpectrum& comb, const SystemParams& p);

}  // namespace omcomb
