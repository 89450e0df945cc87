#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "omcomb/dynamics.hpp"
#include "omcomb/model.hpp"
#include "omcomb/spectrum_comb.hpp"

namespace omcomb {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SolverSettings {
  int steps_per_period = kDefaultStepsPerPeriod;
  double settle_periods = kDefaultSettlePeriods;
  int record_periods = kDefaultRecordPeriods;
  std::optional<int> k_max;  ///< defaults to kDefaultOrderSpan * n
  double threshold_rel = kDefaultThresholdRel;

  int k_max_for(int n) const { return k_max.value_or(kDefaultOrderSpan * n); }

  friend bool operator==(const SolverSettings&, const SolverSettings&) = default;
};

struct OutputSettings {
  std::string spectrum_path = "spectrum.csv";
  std::string metrics_path = "metrics.txt";

  friend bool operator==(const OutputSettings&, const OutputSettings&) = default;
};

struct RunConfig {
  SystemParams params;
  SolverSettings solver;
  OutputSettings output;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Throws ParamError / ConfigError on the first violated constraint.
const RunConfig& validate(const RunConfig& cfg);

/// Flat JSON object: omega_b_hz, kappa_hz, gamma_hz, g_hz, delta_a_hz, eps_c,
/// eps_p, eps_f, n, and optionally delta_p_hz, phase_c, phase_p, phase_f,
/// steps_per_period, settle_periods, record_periods, k_max, threshold_rel,
/// spectrum_path, metrics_path. Frequencies in Hz, amplitudes in 1e9 s^-1.
RunConfig parse_run_config(std::string_view json_text);
RunConfig load_run_config(const std::filesystem::path& path);
std::string to_json(const RunConfig& cfg);

std::string to_json(const SystemParams& p);
SystemParams parse_params(std::string_view json_text);

/// Figure parameter sets: fig2a, fig2b, fig3a, fig3b, fig3c, fig4a, fig4b, fig4c.
const std::vector<std::string_view>& preset_names();
RunConfig preset(std::string_view name);

}  // namespace omcomb
