// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "omcomb/config.hpp"
#include "omcomb/dynamics.hpp"
#include "omcomb/linear_oracle.hpp"
#include "omcomb/spectrum_comb.hpp"
#include "omcomb/steady_state.hpp"
#include "omcomb/sweep.hpp"

namespace fs = std::filesystem;
using namespace omcomb;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

const Complex I(0.0, 1.0);

const RunResult& production(const std::string& name) {
  static std::map<std::string, RunResult> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, run(preset(name))).first;
  return it->second;
}

double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

std::string join(const std::vector<int>& v, int n) {
  std::string s;
  for (int k : v) s += (s.empty() ? "" : " ") + (n == 1 ? std::to_string(k) : fmt::format("{}/{}", k, n));
  return "{" + s + "}";
}

Verdict fig2a_only_first_order() {
  const RunResult& r = production("fig2a");
  const auto& m = *r.metrics;
  const double ref = std::abs(r.spectrum.at(-1).amp_out);
  double worst = 0.0;
  for (const auto& line : r.spectrum.lines)
    if (std::abs(line.k) > 1) worst = std::max(worst, std::abs(line.amp_out));
  const double margin_db = 20.0 * std::log10(ref / worst);
  return {m.present == std::vector<int>{-1, 0, 1} && margin_db > 20.0,
          fmt::format("present={} next line {:.1f} dB below the -1 line", join(m.present, 1), margin_db)};
}

Verdict fig2b_cutoffs() {
  const auto& m = *production("fig2b").metrics;
  const double pos = m.cutoff_pos.value(), neg = m.cutoff_neg.value();
  return {std::abs(pos - 8.0) <= 1.0 && std::abs(neg + 6.0) <= 1.0,
          fmt::format("cutoff_pos={} cutoff_neg={} (expected +8, -6, +-1)", pos, neg)};
}

Verdict fig2b_monotone() {
  const RunResult& r = production("fig2b");
  const auto& m = *r.metrics;
  std::string detail;
  bool pass = true;
  for (int side : {+1, -1}) {
    const int edge = side > 0 ? m.cutoff_pos.num : -m.cutoff_neg.num;
    int violations = 0;
    for (int j = 1; j < edge; ++j)
      if (std::abs(r.spectrum.at(side * (j + 1)).amp_out) >= std::abs(r.spectrum.at(side * j).amp_out))
        ++violations;
    pass = pass && violations <= 1;
    detail += fmt::format("{}side violations={} ", side > 0 ? "+" : "-", violations);
  }
  return {pass, detail + "(allowed 1 per side)"};
}

Verdict fig3_fraction_lines() {
  bool pass = true;
  std::string detail;
  for (const char* name : {"fig3a", "fig3b", "fig3c"}) {
    RunConfig base = preset(name);
    const int n = base.params.n;
    base.params.eps_f = Amplitude::giga(0.0);
    const RunResult without = run(base);
    const RunResult& r = production(name);
    const auto& present = r.metrics->present;
    const auto has = [&](int k) { return std::find(present.begin(), present.end(), k) != present.end(); };
    double worst = 0.0;
    for (int k : without.metrics->present)
      worst = std::max(worst, rel(r.spectrum.at(k).amp_out, without.spectrum.at(k).amp_out));
    const bool ok = has(1) && has(-1) && worst < 0.05;
    pass = pass && ok;
    detail += fmt::format("n={}: +-1/{} {}, integer change {:.2e}; ", n, n,
                          has(1) && has(-1) ? "present" : "MISSING", worst);
  }
  return {pass, detail};
}

Verdict fig3c_half_repetition() {
  const auto& m = *production("fig3c").metrics;
  const std::vector<int> expected{-2, -1, 0, 1, 2};
  const double frep = m.f_rep / preset("fig3c").params.omega_b.rad_per_s();
  return {m.present == expected && m.rep_step == 1 && std::abs(frep - 0.5) < 1e-12,
          fmt::format("present={} f_rep={} omega_b", join(m.present, 2), frep)};
}

Verdict fig4b_range() {
  const auto& m = *production("fig4b").metrics;
  const auto& p = preset("fig4b").params;
  const double lo = m.range_lo_orders(p.n), hi = m.range_hi_orders(p.n);
  const double frep = static_cast<double>(m.rep_step) / p.n;
  return {std::abs(lo + 3.4) <= 0.3 && std::abs(hi - 5.4) <= 0.3 && std::abs(frep - 0.1) < 1e-12,
          fmt::format("range=[{}, {}] omega_b (expected [-3.4, 5.4] +-0.3) f_rep={} omega_b", lo, hi, frep)};
}

Verdict fig4a_mixing_lines() {
  const auto& m = *production("fig4a").metrics;
  std::vector<int> missing;
  for (int k : {11, 9, 19, 21, 2, 18})
    for (int s : {+1, -1})
      if (std::find(m.present.begin(), m.present.end(), s * k) == m.present.end()) missing.push_back(s * k);
  return {missing.empty(), missing.empty() ? "all of +-11,9,19,21,2,18 (/10) present"
                                           : "missing " + join(missing, 10)};
}

Verdict linear_oracle() {
  std::vector<double> devs;
  for (double ratio : {1e-4, 1e-3}) {
    RunConfig cfg = preset("fig2a");
    cfg.solver.steps_per_period = 1600;
    auto& p = cfg.params;
    p.eps_p = Amplitude::per_second(ratio * p.eps_c.per_second());
    const RunResult r = run(cfg);
    const Complex eps = std::polar(p.eps_p.per_second(), p.phase_p);
    const LinearResponse lin = linear_response(p, p.probe_p_detuning().rad_per_s(), eps);
    devs.push_back(rel(r.spectrum.at(probe_p_harmonic(p)).amp_out, lin.out_plus(p, eps)));
  }
  const double slope = std::log10(devs[1] / devs[0]);
  return {devs[0] < 1e-3 && devs[1] < 1e-3 && slope >= 1.0,
          fmt::format("rel dev {:.3e} @1e-4, {:.3e} @1e-3; log-slope {:.2f} (>= 1)", devs[0], devs[1], slope)};
}

Verdict bare_cavity() {
  RunConfig cfg = preset("fig3a");
  auto& p = cfg.params;
  p.g = Frequency::hertz(0.0);
  const RunResult r = run(cfg);
  const double kappa = p.kappa.rad_per_s(), root = std::sqrt(2.0 * kappa), delta_a = p.delta_a.rad_per_s();
  const double wf = p.omega_b.rad_per_s() / p.n;
  const std::vector<std::pair<int, Complex>> drives{
      {0, std::polar(p.eps_c.per_second(), p.phase_c)},
      {probe_p_harmonic(p), std::polar(p.eps_p.per_second(), p.phase_p)},
      {1, std::polar(p.eps_f.per_second(), p.phase_f)}};
  double worst = 0.0;
  for (const auto& [k, eps] : drives) {
    const Complex expected = eps - root * eps / (I * (delta_a - k * wf) + kappa);
    worst = std::max(worst, rel(r.spectrum.at(k).amp_out, expected));
  }
  const auto present = comb_metrics(r.spectrum, 1e-10).present;
  return {worst < 1e-6 && present == std::vector<int>{0, 1, 10},
          fmt::format("max rel error {:.2e}, lines above 1e-10: {}", worst, join(present, p.n))};
}

Verdict steady_consistency() {
  const SystemParams p = baseline_params();
  const SteadyBranch b = vacuum_branch(p);
  const double dt = step_for(p, kDefaultStepsPerPeriod);
  const auto steps = static_cast<long long>(std::ceil(30.0 / p.gamma.rad_per_s() / dt));
  const double x = std::norm(integrate_steps(p, FieldState{}, dt, steps, steps).samples.back().alpha);
  const double dev = std::abs(x - b.intensity) / b.intensity;
  return {dev < 1e-6, fmt::format("|alpha0|^2 relative deviation {:.2e}", dev)};
}

Verdict parseval_leakage() {
  double parseval = 0.0, leak = 0.0;
  for (auto name : preset_names()) {
    const RunResult& r = production(std::string(name));
    parseval = std::max(parseval, r.spectrum.parseval_defect());
    leak = std::max(leak, r.spectrum.relative_leakage());
  }
  return {parseval < 1e-6 && leak < 1e-8,
          fmt::format("worst Parseval defect {:.2e}, worst leakage {:.2e} over {} presets", parseval, leak,
                      preset_names().size())};
}

Verdict rk4_order() {
  const SystemParams p = preset("fig4b").params;
  const double period = 1.0 / p.omega_b.hz();
  const auto endpoint = [&](int spp) {
    return integrate_steps(p, FieldState{}, period / spp, 10LL * spp, 10LL * spp).samples.back().alpha;
  };
  const Complex ref = endpoint(1600);
  std::vector<double> err;
  for (int spp : {100, 200, 400}) err.push_back(std::abs(endpoint(spp) - ref));
  const double o1 = std::log2(err[0] / err[1]), o2 = std::log2(err[1] / err[2]);
  return {o1 >= 3.7 && o1 <= 4.3 && o2 >= 3.7 && o2 <= 4.3,
          fmt::format("observed orders {:.3f}, {:.3f}", o1, o2)};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Verdict determinism() {
  const fs::path dir = fs::temp_directory_path() / "omcomb_acceptance";
  fs::remove_all(dir);
  std::vector<std::string> csv;
  for (const char* sub : {"a", "b"}) {
    const std::string cmd = fmt::format("{} run --preset fig4b --out {} > {}", OMCOMB_CLI_PATH,
                                        (dir / sub).string(), (dir.string() + "_" + sub + ".log"));
    if (std::system(cmd.c_str()) != 0) return {false, "cli run failed"};
    csv.push_back(slurp(dir / sub / "spectrum.csv"));
  }
  fs::remove_all(dir);
  const bool same = !csv[0].empty() && csv[0] == csv[1];
  return {same, fmt::format("two CLI runs, {} bytes, {}", csv[0].size(), same ? "identical" : "DIFFER")};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
      {"fig2a only orders 0,+-1", fig2a_only_first_order},
      {"fig2b cutoffs +8/-6", fig2b_cutoffs},
      {"fig2b amplitude monotone", fig2b_monotone},
      {"fig3 fraction lines, integer lines unchanged", fig3_fraction_lines},
      {"fig3c half repetition", fig3c_half_repetition},
      {"fig4b comb range and f_rep", fig4b_range},
      {"fig4a mixing lines", fig4a_mixing_lines},
      {"linear response oracle", linear_oracle},
      {"bare cavity Lorentzians", bare_cavity},
      {"steady state vs integration", steady_consistency},
      {"Parseval and leakage", parseval_leakage},
      {"RK4 convergence order", rk4_order},
      {"CLI determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failed += !v.pass;
    fmt::print("{} [{:2}] {}: {}\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, v.detail);
    std::fflush(stdout);
  }
  fmt::print("{}/{} criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
