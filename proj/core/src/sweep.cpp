#include "omcomb/sweep.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "omcomb/dynamics.hpp"

namespace omcomb {

RunResult run(const RunConfig& cfg) {
  validate(cfg);
  const auto& p = cfg.params;
  const auto& s = cfg.solver;
  const double dt = step_for(p, s.steps_per_period);
  const long long settle = settle_steps(p, s.settle_periods, s.steps_per_period);
  const long long window =
      static_cast<long long>(s.record_periods) * p.n * static_cast<long long>(s.steps_per_period);

  // Half-open window: exactly record_periods fundamental periods of samples.
  const Trajectory traj = integrate_steps(p, FieldState{}, dt, settle + window - 1, settle);

  RunResult result;
  result.spectrum = output_spectrum(project_harmonics(traj, p, s.k_max_for(p.n)), p);
  try {
    result.metrics = comb_metrics(result.spectrum, s.threshold_rel);
  } catch (const EmptySpectrumError&) {
    result.metrics.reset();
  }
  return result;
}

namespace {

std::string order_str(const SidebandOrder& o) { return fmt::format("{}/{}", o.num, o.den); }

}  // namespace

std::string format_metrics(const RunResult& r, const RunConfig& cfg) {
  const auto& p = cfg.params;
  std::string out;
  const auto put = [&out](std::string_view key, const auto& value) {
    out += fmt::format("{}={}\n", key, value);
  };
  put("n", p.n);
  put("omega_b_hz", fmt::format("{:.17g}", p.omega_b.hz()));
  put("k_max", r.spectrum.k_max());
  put("threshold_rel", fmt::format("{:.17g}", cfg.solver.threshold_rel));
  put("parseval_defect", fmt::format("{:.6e}", r.spectrum.parseval_defect()));
  put("relative_leakage", fmt::format("{:.6e}", r.spectrum.relative_leakage()));
  if (!r.metrics) {
    put("status", "empty");
    return out;
  }
  const auto& m = *r.metrics;
  put("status", "ok");
  put("max_abs_out", fmt::format("{:.17g}", m.max_abs_out));
  put("present_lines", m.present.size());
  put("cutoff_pos", order_str(m.cutoff_pos));
  put("cutoff_neg", order_str(m.cutoff_neg));
  put("cutoff_pos_order", fmt::format("{:.17g}", m.cutoff_pos.value()));
  put("cutoff_neg_order", fmt::format("{:.17g}", m.cutoff_neg.value()));
  put("f_rep_hz", fmt::format("{:.17g}", m.f_rep / constants::two_pi));
  put("f_rep_over_omega_b", fmt::format("{:.17g}", static_cast<double>(m.rep_step) / p.n));
  put("range_lo", order_str({m.span_lo, p.n}));
  put("range_hi", order_str({m.span_hi, p.n}));
  put("range_lo_over_omega_b", fmt::format("{:.17g}", m.range_lo_orders(p.n)));
  put("range_hi_over_omega_b", fmt::format("{:.17g}", m.range_hi_orders(p.n)));
  return out;
}

std::string_view to_string(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::EpsP: return "eps_p";
    case SweepAxis::EpsF: return "eps_f";
    case SweepAxis::N: return "n";
    case SweepAxis::DeltaA: return "delta_a";
  }
  return "unknown";
}

SweepAxis parse_axis(std::string_view name) {
  if (name == "eps_p") return SweepAxis::EpsP;
  if (name == "eps_f") return SweepAxis::EpsF;
  if (name == "n") return SweepAxis::N;
  if (name == "delta_a") return SweepAxis::DeltaA;
  throw ConfigError("unknown sweep axis: " + std::string(name));
}

void validate(const SweepSpec& spec) {
  if (spec.values.empty()) throw ConfigError("sweep values must not be empty");
  if (spec.axis == SweepAxis::N)
    for (double v : spec.values)
      if (!(v >= 1.0) || std::floor(v) != v) throw ConfigError("sweep over n needs positive integers");
}

RunConfig apply_axis(const RunConfig& base, SweepAxis axis, double value) {
  RunConfig cfg = base;
  switch (axis) {
    case SweepAxis::EpsP: cfg.params.eps_p = Amplitude::giga(value); break;
    case SweepAxis::EpsF: cfg.params.eps_f = Amplitude::giga(value); break;
    case SweepAxis::N: cfg.params.n = static_cast<int>(value); break;
    case SweepAxis::DeltaA: cfg.params.delta_a = Frequency::hertz(value); break;
  }
  return cfg;
}

namespace {

SweepRow run_row(const SweepSpec& spec, double value) {
  SweepRow row;
  row.value = value;
  try {
    const RunConfig cfg = apply_axis(spec.base, spec.axis, value);
    row.n = cfg.params.n;
    const RunResult r = run(cfg);
    row.ok = true;
    if (!r.metrics) {
      row.empty = true;
      row.cutoff_neg = row.cutoff_pos = {0, row.n};
      return row;
    }
    const auto& m = *r.metrics;
    row.cutoff_neg = m.cutoff_neg;
    row.cutoff_pos = m.cutoff_pos;
    row.f_rep_over_omega_b = static_cast<double>(m.rep_step) / row.n;
    row.range_lo_over_omega_b = m.range_lo_orders(row.n);
    row.range_hi_over_omega_b = m.range_hi_orders(row.n);
    row.largest_line = m.max_abs_out;
  } catch (const std::exception& e) {
    row.ok = false;
    row.error = e.what();
  }
  return row;
}

}  // namespace

std::vector<SweepRow> sweep(const SweepSpec& spec, unsigned threads) {
  validate(spec);
  std::vector<SweepRow> rows(spec.values.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(rows.size()));

  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) rows[i] = run_row(spec, spec.values[i]);
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  return rows;
}

void write_sweep_csv(std::ostream& os, const SweepSpec& spec, const std::vector<SweepRow>& rows) {
  os << fmt::format("{},cutoff_neg,cutoff_pos,f_rep_over_omega_b,range_lo_over_omega_b,"
                    "range_hi_over_omega_b,largest_line,status\n",
                    to_string(spec.axis));
  for (const auto& r : rows) {
    std::string status = r.ok ? (r.empty ? "empty" : "ok") : "error: " + r.error;
    std::replace(status.begin(), status.end(), ',', ';');
    std::replace(status.begin(), status.end(), '\n', ' ');
    os << fmt::format("{:.17g},{},{},{:.17g},{:.17g},{:.17g},{:.17g},{}\n", r.value,
                      order_str(r.cutoff_neg), order_str(r.cutoff_pos), r.f_rep_over_omega_b,
                      r.range_lo_over_omega_b, r.range_hi_over_omega_b, r.largest_line, status);
  }
}

SweepSpec parse_sweep_spec(std::string_view text) {
  SweepSpec spec;
  spec.base = parse_run_config(text);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("malformed JSON: ") + e.what());
  }
  const auto it = j.find("sweep");
  if (it == j.end() || !it->is_object()) throw ConfigError("sweep: missing block");
  if (!it->contains("axis") || !(*it)["axis"].is_string()) throw ConfigError("sweep.axis: missing");
  spec.axis = parse_axis((*it)["axis"].get<std::string>());
  if (!it->contains("values") || !(*it)["values"].is_array())
    throw ConfigError("sweep.values: must be an array");
  for (const auto& v : (*it)["values"]) {
    if (!v.is_number()) throw ConfigError("sweep.values: numbers only");
    spec.values.push_back(v.get<double>());
  }
  validate(spec);
  return spec;
}

}  // namespace omcomb
