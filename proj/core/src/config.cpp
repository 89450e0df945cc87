#include "omcomb/config.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace omcomb {

using json = nlohmann::json;

const RunConfig& validate(const RunConfig& cfg) {
  validate(cfg.params);
  const auto& s = cfg.solver;
  if (s.steps_per_period <= 0) throw ConfigError("steps_per_period: must be > 0");
  if (constants::two_pi / s.steps_per_period >= kResolutionGuard)
    throw ConfigError("steps_per_period: dt * omega_b must be < 0.1 (need > 62)");
  if (!(s.settle_periods > 0.0) || !std::isfinite(s.settle_periods))
    throw ConfigError("settle_periods: must be > 0");
  if (s.record_periods <= 0) throw ConfigError("record_periods: must be > 0");
  if (s.k_max && *s.k_max <= 0) throw ConfigError("k_max: must be > 0");
  if (!(s.threshold_rel > 0.0 && s.threshold_rel < 1.0))
    throw ConfigError("threshold_rel: must lie in (0, 1)");
  probe_p_harmonic(cfg.params);
  return cfg;
}

namespace {

const std::set<std::string, std::less<>> kKnownKeys = {
    "omega_b_hz", "kappa_hz",   "gamma_hz",         "g_hz",           "delta_a_hz",
    "delta_p_hz", "eps_c",      "eps_p",            "eps_f",          "n",
    "phase_c",    "phase_p",    "phase_f",          "steps_per_period", "settle_periods",
    "record_periods", "k_max",  "threshold_rel",    "spectrum_path",  "metrics_path",
    "sweep"};

double number(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) throw ConfigError(std::string(key) + ": missing");
  if (!it->is_number()) throw ConfigError(std::string(key) + ": must be a number");
  return it->get<double>();
}

int integer(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) throw ConfigError(std::string(key) + ": missing");
  if (it->is_number_integer()) return it->get<int>();
  if (it->is_number_float()) {
    const double v = it->get<double>();
    if (std::floor(v) == v && std::abs(v) < 1e9) return static_cast<int>(v);
  }
  throw ConfigError(std::string(key) + ": must be an integer");
}

std::optional<double> optional_number(const json& j, const char* key) {
  if (!j.contains(key)) return std::nullopt;
  return number(j, key);
}

json parse_object(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  for (const auto& [key, _] : j.items())
    if (!kKnownKeys.contains(key)) throw ConfigError("unknown key: " + key);
  return j;
}

SystemParams params_from(const json& j) {
  SystemParams p;
  p.omega_b = Frequency::hertz(number(j, "omega_b_hz"));
  p.kappa = Frequency::hertz(number(j, "kappa_hz"));
  p.gamma = Frequency::hertz(number(j, "gamma_hz"));
  p.g = Frequency::hertz(number(j, "g_hz"));
  p.delta_a = Frequency::hertz(number(j, "delta_a_hz"));
  p.eps_c = Amplitude::giga(number(j, "eps_c"));
  p.eps_p = Amplitude::giga(number(j, "eps_p"));
  p.eps_f = Amplitude::giga(number(j, "eps_f"));
  p.n = integer(j, "n");
  if (auto v = optional_number(j, "delta_p_hz")) p.delta_p = Frequency::hertz(*v);
  p.phase_c = optional_number(j, "phase_c").value_or(0.0);
  p.phase_p = optional_number(j, "phase_p").value_or(0.0);
  p.phase_f = optional_number(j, "phase_f").value_or(0.0);
  return p;
}

json params_json(const SystemParams& p) {
  json j;
  j["omega_b_hz"] = p.omega_b.hz();
  j["kappa_hz"] = p.kappa.hz();
  j["gamma_hz"] = p.gamma.hz();
  j["g_hz"] = p.g.hz();
  j["delta_a_hz"] = p.delta_a.hz();
  if (p.delta_p) j["delta_p_hz"] = p.delta_p->hz();
  j["eps_c"] = p.eps_c.giga();
  j["eps_p"] = p.eps_p.giga();
  j["eps_f"] = p.eps_f.giga();
  j["n"] = p.n;
  if (p.phase_c != 0.0) j["phase_c"] = p.phase_c;
  if (p.phase_p != 0.0) j["phase_p"] = p.phase_p;
  if (p.phase_f != 0.0) j["phase_f"] = p.phase_f;
  return j;
}

}  // namespace

SystemParams parse_params(std::string_view text) { return params_from(parse_object(text)); }

std::string to_json(const SystemParams& p) { return params_json(p).dump(2); }

RunConfig parse_run_config(std::string_view text) {
  const json j = parse_object(text);
  RunConfig cfg;
  cfg.params = params_from(j);
  if (j.contains("steps_per_period")) cfg.solver.steps_per_period = integer(j, "steps_per_period");
  if (auto v = optional_number(j, "settle_periods")) cfg.solver.settle_periods = *v;
  if (j.contains("record_periods")) cfg.solver.record_periods = integer(j, "record_periods");
  if (j.contains("k_max")) cfg.solver.k_max = integer(j, "k_max");
  if (auto v = optional_number(j, "threshold_rel")) cfg.solver.threshold_rel = *v;
  if (j.contains("spectrum_path")) cfg.output.spectrum_path = j.at("spectrum_path").get<std::string>();
  if (j.contains("metrics_path")) cfg.output.metrics_path = j.at("metrics_path").get<std::string>();
  return cfg;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_run_config(ss.str());
}

std::string to_json(const RunConfig& cfg) {
  json j = params_json(cfg.params);
  const SolverSettings defaults;
  const auto& s = cfg.solver;
  if (s.steps_per_period != defaults.steps_per_period) j["steps_per_period"] = s.steps_per_period;
  if (s.settle_periods != defaults.settle_periods) j["settle_periods"] = s.settle_periods;
  if (s.record_periods != defaults.record_periods) j["record_periods"] = s.record_periods;
  if (s.k_max) j["k_max"] = *s.k_max;
  if (s.threshold_rel != defaults.threshold_rel) j["threshold_rel"] = s.threshold_rel;
  const OutputSettings out_defaults;
  if (cfg.output.spectrum_path != out_defaults.spectrum_path)
    j["spectrum_path"] = cfg.output.spectrum_path;
  if (cfg.output.metrics_path != out_defaults.metrics_path)
    j["metrics_path"] = cfg.output.metrics_path;
  return j.dump(2);
}

const std::vector<std::string_view>& preset_names() {
  static const std::vector<std::string_view> names = {"fig2a", "fig2b", "fig3a", "fig3b",
                                                      "fig3c", "fig4a", "fig4b", "fig4c"};
  return names;
}

RunConfig preset(std::string_view name) {
  RunConfig cfg;
  cfg.params = baseline_params();
  auto& p = cfg.params;
  const auto set = [&](double eps_p, double eps_f, int n) {
    p.eps_p = Amplitude::giga(eps_p);
    p.eps_f = Amplitude::giga(eps_f);
    p.n = n;
  };
  if (name == "fig2a") set(9.0, 0.0, 1);
  else if (name == "fig2b") set(3e3, 0.0, 1);
  else if (name == "fig3a") set(9.0, 0.9, 10);
  else if (name == "fig3b") set(9.0, 0.9, 5);
  else if (name == "fig3c") set(9.0, 0.9, 2);
  else if (name == "fig4a") set(3e3, 90.0, 10);
  else if (name == "fig4b") set(3e3, 600.0, 10);
  else if (name == "fig4c") set(3e3, 1200.0, 10);
  else throw ConfigError("unknown preset: " + std::string(name));
  return cfg;
}

}  // namespace omcomb
