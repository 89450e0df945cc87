#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "omcomb/config.hpp"
#include "omcomb/spectrum_comb.hpp"

namespace omcomb {

struct RunResult {
  CombSpectrum spectrum;  ///< intracavity and output amplitudes
  /// Empty when every output line vanishes (all drives off).
  std::optional<CombMetrics> metrics;
};

/// settle -> record -> project -> output spectrum -> metrics.
RunResult run(const RunConfig& cfg);

/// Flat key=value document, one entry per line, fixed key order.
std::string format_metrics(const RunResult& result, const RunConfig& cfg);

enum class SweepAxis { EpsP, EpsF, N, DeltaA };

std::string_view to_string(SweepAxis axis);
SweepAxis parse_axis(std::string_view name);

/// Values are in config units: GHz for eps_p/eps_f, Hz for delta_a, integer n.
struct SweepSpec {
  SweepAxis axis = SweepAxis::EpsP;
  std::vector<double> values;
  RunConfig base;
};

void validate(const SweepSpec& spec);

/// base with the axis value applied.
RunConfig apply_axis(const RunConfig& base, SweepAxis axis, double value);

struct SweepRow {
  double value = 0.0;
  bool ok = false;
  bool empty = false;   ///< no output line at all
  std::string error;    ///< set when !ok
  int n = 1;
  SidebandOrder cutoff_neg;
  SidebandOrder cutoff_pos;
  double f_rep_over_omega_b = 0.0;
  double range_lo_over_omega_b = 0.0;
  double range_hi_over_omega_b = 0.0;
  double largest_line = 0.0;
};

/// One row per value in input order. Rows run concurrently on up to
/// `threads` workers (0 = hardware concurrency); a failing row records its
/// error and leaves the others untouched.
std::vector<SweepRow> sweep(const SweepSpec& spec, unsigned threads = 0);

/// Columns: value,cutoff_neg,cutoff_pos,f_rep_over_omega_b,range_lo_over_omega_b,
/// range_hi_over_omega_b,largest_line,status
void write_sweep_csv(std::ostream& os, const SweepSpec& spec, const std::vector<SweepRow>& rows);

/// Reads a run config carrying a "sweep": {"axis": ..., "values": [...]} block.
SweepSpec parse_sweep_spec(std::string_view json_text);

}  // namespace omcomb
