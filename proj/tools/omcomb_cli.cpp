// omcomb: simulate the three-tone driven optomechanical cavity and analyse
// its output sideband comb.

#include <CLI11.hpp>
#include <fmt/format.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "omcomb/config.hpp"
#include "omcomb/dynamics.hpp"
#include "omcomb/linear_oracle.hpp"
#include "omcomb/spectrum_comb.hpp"
#include "omcomb/steady_state.hpp"
#include "omcomb/sweep.hpp"

namespace fs = std::filesystem;
using namespace omcomb;

namespace {

struct CommonOptions {
  std::string config;
  std::string preset;
  std::string out = ".";
  std::optional<double> threshold;
};

void add_common(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--config", o.config, "JSON config file");
  cmd->add_option("--preset", o.preset, "figure preset")
      ->check(CLI::IsMember(std::vector<std::string>(preset_names().begin(), preset_names().end())));
  cmd->add_option("--out", o.out, "output directory");
  cmd->add_option("--threshold", o.threshold, "relative line presence threshold");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunConfig resolve(const CommonOptions& o) {
  if (!o.config.empty() && !o.preset.empty())
    throw ConfigError("--config and --preset are mutually exclusive");
  RunConfig cfg;
  if (!o.preset.empty()) cfg = preset(o.preset);
  else if (!o.config.empty()) cfg = parse_run_config(read_file(o.config));
  else throw ConfigError("one of --config or --preset is required");
  if (o.threshold) cfg.solver.threshold_rel = *o.threshold;
  validate(cfg);
  return cfg;
}

void write_text(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

int cmd_steady(const CommonOptions& o) {
  const RunConfig cfg = resolve(o);
  const auto branches = solve_steady(cfg.params);
  std::cout << "branch,intensity,re_alpha0,im_alpha0,re_beta0,im_beta0,stable,max_growth_rate\n";
  for (std::size_t i = 0; i < branches.size(); ++i) {
    const auto& b = branches[i];
    std::cout << fmt::format("{},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{},{:.6e}\n", i,
                             b.intensity, b.alpha0.real(), b.alpha0.imag(), b.beta0.real(),
                             b.beta0.imag(), b.stable ? "yes" : "no", b.max_growth_rate);
  }
  return 0;
}

int cmd_run(const CommonOptions& o) {
  const RunConfig cfg = resolve(o);
  const RunResult r = run(cfg);
  std::ostringstream csv;
  write_spectrum_csv(csv, r.spectrum, cfg.params);
  const fs::path dir(o.out);
  write_text(dir / cfg.output.spectrum_path, csv.str());
  const std::string metrics = format_metrics(r, cfg);
  write_text(dir / cfg.output.metrics_path, metrics);
  std::cout << metrics;
  return 0;
}

int cmd_sweep(const CommonOptions& o, const std::string& axis, const std::vector<double>& values,
              unsigned threads) {
  SweepSpec spec;
  if (!o.config.empty() && o.preset.empty() && (axis.empty() || values.empty())) {
    spec = parse_sweep_spec(read_file(o.config));
    if (o.threshold) spec.base.solver.threshold_rel = *o.threshold;
  } else {
    spec.base = resolve(o);
  }
  if (!axis.empty()) spec.axis = parse_axis(axis);
  if (!values.empty()) spec.values = values;
  validate(spec);

  const auto rows = sweep(spec, threads);
  std::ostringstream csv;
  write_sweep_csv(csv, spec, rows);
  write_text(fs::path(o.out) / "sweep.csv", csv.str());
  std::cout << csv.str();
  return 0;
}

int cmd_oracle(const CommonOptions& o) {
  const RunConfig cfg = resolve(o);
  const auto& p = cfg.params;
  const RunResult r = run(cfg);
  const TwoProbeResponse lin = two_probe_linear_response(p);

  const auto rel = [](std::complex<double> a, std::complex<double> b) {
    const double s = std::abs(b);
    return s == 0.0 ? std::abs(a) : std::abs(a - b) / s;
  };
  const int kp = probe_p_harmonic(p);
  std::cout << "line,k,abs_pipeline,abs_linear,rel_error\n";
  const auto report = [&](const char* name, int k, std::complex<double> predicted) {
    if (std::abs(k) > r.spectrum.k_max()) return;
    const auto got = r.spectrum.at(k).amp_out;
    std::cout << fmt::format("{},{},{:.17g},{:.17g},{:.6e}\n", name, k, std::abs(got),
                             std::abs(predicted), rel(got, predicted));
  };
  report("probe_p+", kp, lin.probe_p.out_plus(p, std::polar(p.eps_p.per_second(), p.phase_p)));
  report("probe_p-", -kp, lin.probe_p.out_minus(p));
  if (p.eps_f.giga() > 0.0 && kp != 1) {
    report("probe_f+", 1, lin.probe_f.out_plus(p, std::polar(p.eps_f.per_second(), p.phase_f)));
    report("probe_f-", -1, lin.probe_f.out_minus(p));
  }
  std::cout << fmt::format("weak_regime={}\n", lin.outside_weak_regime ? "no" : "yes");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optomechanical sideband comb simulator"};
  app.require_subcommand(1);

  CommonOptions steady_o, run_o, sweep_o, oracle_o;
  auto* steady_cmd = app.add_subcommand("steady", "print probe-free steady-state branches");
  add_common(steady_cmd, steady_o);
  auto* run_cmd = app.add_subcommand("run", "simulate one configuration and export the comb");
  add_common(run_cmd, run_o);
  auto* sweep_cmd = app.add_subcommand("sweep", "sweep one drive parameter");
  add_common(sweep_cmd, sweep_o);
  std::string axis;
  std::vector<double> values;
  unsigned threads = 0;
  sweep_cmd->add_option("--axis", axis, "eps_p | eps_f | n | delta_a");
  sweep_cmd->add_option("--values", values, "comma-separated axis values")->delimiter(',');
  sweep_cmd->add_option("--threads", threads, "worker threads (0 = all cores)");
  auto* oracle_cmd = app.add_subcommand("oracle", "compare probe lines with linear response");
  add_common(oracle_cmd, oracle_o);

  CLI11_PARSE(app, argc, argv);

  const auto error_line = [](std::string_view kind, std::string_view msg) {
    std::cerr << fmt::format("error: kind={} message=\"{}\"\n", kind, msg);
  };
  try {
    if (*steady_cmd) return cmd_steady(steady_o);
    if (*run_cmd) return cmd_run(run_o);
    if (*sweep_cmd) return cmd_sweep(sweep_o, axis, values, threads);
    if (*oracle_cmd) return cmd_oracle(oracle_o);
  } catch (const DivergenceError& e) {
    error_line("divergence", e.what());
    return 3;
  } catch (const ParamError& e) {
    error_line("param", e.what());
    return 2;
  } catch (const ConfigError& e) {
    error_line("config", e.what());
    return 2;
  } catch (const std::exception& e) {
    error_line("runtime", e.what());
    return 1;
  }
  return 1;
}
