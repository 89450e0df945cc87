#include "omcomb/spectrum_comb.hpp"

#include <fftw3.h>
#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <memory>
#include <mutex>
#include <numbers>

namespace omcomb {

using Complex = std::complex<double>;

std::string_view to_string(LineKind kind) {
  switch (kind) {
    case LineKind::Control: return "control";
    case LineKind::IntegerOrder: return "integer-order";
    case LineKind::FractionOrder: return "fraction-order";
    case LineKind::Sum: return "sum";
    case LineKind::Difference: return "difference";
  }
  return "unknown";
}

LineClass classify_line(int k, int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  LineClass c;
  c.order_num = k;
  c.order_den = n;
  const int a = std::abs(k);
  if (k == 0) {
    c.kind = LineKind::Control;
  } else if (a % n == 0) {
    c.kind = LineKind::IntegerOrder;
  } else if (a < n) {
    c.kind = LineKind::FractionOrder;
  } else {
    const int j = a / n;
    const int r = a % n;
    c.as_sum = MixingOrder{j, r};
    c.as_difference = MixingOrder{j + 1, n - r};
    c.kind = (r <= n - r) ? LineKind::Sum : LineKind::Difference;
  }
  return c;
}

const CombLine& CombSpectrum::at(int k) const {
  const int km = k_max();
  if (std::abs(k) > km) throw std::out_of_range(fmt::format("harmonic {} outside +-{}", k, km));
  return lines[static_cast<std::size_t>(k + km)];
}

double CombSpectrum::max_abs_alpha() const {
  double m = 0.0;
  for (const auto& l : lines) m = std::max(m, std::abs(l.amp_alpha));
  return m;
}

double CombSpectrum::max_abs_out() const {
  double m = 0.0;
  for (const auto& l : lines) m = std::max(m, std::abs(l.amp_out));
  return m;
}

double CombSpectrum::parseval_defect() const {
  double sum = 0.0;
  for (const auto& l : lines) sum += std::norm(l.amp_alpha);
  if (mean_intensity == 0.0) return sum == 0.0 ? 0.0 : 1.0;
  return std::abs(sum - mean_intensity) / mean_intensity;
}

double CombSpectrum::relative_leakage() const {
  const double m = max_abs_alpha();
  return m == 0.0 ? 0.0 : leakage_floor / m;
}

namespace {

struct Window {
  long long per_period = 0;  // samples per fundamental period
  std::size_t count = 0;     // samples entering the sum
  bool closed = false;       // trapezoid end weights
};

Window check_window(const Trajectory& traj, const SystemParams& p) {
  validate(p);
  if (traj.size() < 2 || !(traj.dt > 0.0)) throw WindowError("trajectory needs >= 2 samples");
  const double period = p.fundamental_period();
  const double ratio = period / traj.dt;
  const long long per = std::llround(ratio);
  if (per < 1 || std::abs(ratio - static_cast<double>(per)) > 1e-9 * ratio)
    throw WindowError("sample spacing does not divide the fundamental period");
  const auto size = static_cast<long long>(traj.size());
  Window w;
  w.per_period = per;
  if (size % per == 0) {
    w.count = traj.size();
  } else if ((size - 1) % per == 0) {
    w.count = traj.size();
    w.closed = true;
  } else {
    throw WindowError(fmt::format(
        "window of {} samples is not a whole number of fundamental periods ({} samples each)",
        size, per));
  }
  return w;
}

double weight(const Window& w, std::size_t j) {
  if (!w.closed) return 1.0 / static_cast<double>(w.count);
  const double base = 1.0 / static_cast<double>(w.count - 1);
  return (j == 0 || j + 1 == w.count) ? 0.5 * base : base;
}

// e^{+2 pi i r / P} for r in [0, P)
std::vector<Complex> unit_roots(long long per) {
  std::vector<Complex> t(static_cast<std::size_t>(per));
  for (long long r = 0; r < per; ++r)
    t[static_cast<std::size_t>(r)] =
        std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(per));
  return t;
}

// FFTW planning is not thread-safe.
std::mutex& fftw_planner_mutex() {
  static std::mutex m;
  return m;
}

std::size_t wrap(long long v, long long per) {
  const long long m = v % per;
  return static_cast<std::size_t>(m < 0 ? m + per : m);
}

}  // namespace

CombSpectrum project_harmonics(const Trajectory& traj, const SystemParams& p, int k_max) {
  if (k_max < 0) throw std::invalid_argument("k_max must be >= 0");
  const Window w = check_window(traj, p);
  const auto roots = unit_roots(w.per_period);
  const double wf = p.fundamental_rad();

  CombSpectrum comb;
  comb.n = p.n;
  comb.omega_fund = wf;
  comb.lines.reserve(static_cast<std::size_t>(2 * k_max + 1));

  // e^{i k wf t_j} = e^{i k wf t0} * e^{2 pi i k j / P}
  std::vector<Complex> start_phase(static_cast<std::size_t>(2 * k_max + 1));
  for (int k = -k_max; k <= k_max; ++k)
    start_phase[static_cast<std::size_t>(k + k_max)] = std::polar(1.0, k * wf * traj.t0);

  for (int k = -k_max; k <= k_max; ++k) {
    Complex acc = 0.0;
    for (std::size_t j = 0; j < w.count; ++j)
      acc += weight(w, j) * traj.samples[j].alpha *
             roots[wrap(static_cast<long long>(k) * static_cast<long long>(j), w.per_period)];
    CombLine line;
    line.k = k;
    line.amp_alpha = acc * start_phase[static_cast<std::size_t>(k + k_max)];
    line.kind = classify_line(k, p.n).kind;
    comb.lines.push_back(line);
  }

  double intensity = 0.0;
  for (std::size_t j = 0; j < w.count; ++j) intensity += weight(w, j) * std::norm(traj.samples[j].alpha);
  comb.mean_intensity = intensity;

  // Residual left after removing the comb, projected at an off-grid frequency.
  const double test_freq = p.omega_b.rad_per_s() * std::numbers::sqrt2 / 7.0;
  Complex leak = 0.0;
  for (std::size_t j = 0; j < w.count; ++j) {
    Complex model = 0.0;
    for (int k = -k_max; k <= k_max; ++k) {
      const auto idx = static_cast<std::size_t>(k + k_max);
      model += comb.lines[idx].amp_alpha * std::conj(start_phase[idx]) *
               roots[wrap(-static_cast<long long>(k) * static_cast<long long>(j), w.per_period)];
    }
    leak += weight(w, j) * (traj.samples[j].alpha - model) * std::polar(1.0, test_freq * traj.time(j));
  }
  comb.leakage_floor = std::abs(leak);
  return comb;
}

std::vector<Complex> fft_harmonics(const Trajectory& traj, const SystemParams& p, int k_max) {
  if (k_max < 0) throw std::invalid_argument("k_max must be >= 0");
  const Window w = check_window(traj, p);
  const std::size_t len = w.closed ? w.count - 1 : w.count;
  const auto periods = static_cast<long long>(len) / w.per_period;

  struct FftwFree {
    void operator()(void* ptr) const { fftw_free(ptr); }
  };
  std::unique_ptr<fftw_complex[], FftwFree> in(fftw_alloc_complex(len));
  std::unique_ptr<fftw_complex[], FftwFree> out(fftw_alloc_complex(len));
  const int size = static_cast<int>(len);
  fftw_plan plan;
  {
    const std::lock_guard lock(fftw_planner_mutex());
    plan = fftw_plan_dft_1d(size, in.get(), out.get(), FFTW_FORWARD, FFTW_ESTIMATE);
  }
  for (std::size_t j = 0; j < len; ++j) {
    in[j][0] = traj.samples[j].alpha.real();
    in[j][1] = traj.samples[j].alpha.imag();
  }
  fftw_execute(plan);
  {
    const std::lock_guard lock(fftw_planner_mutex());
    fftw_destroy_plan(plan);
  }

  // Harmonic k sits in bin -k * periods (mod len) of the forward transform.
  const double wf = p.fundamental_rad();
  std::vector<Complex> amps;
  amps.reserve(static_cast<std::size_t>(2 * k_max + 1));
  for (int k = -k_max; k <= k_max; ++k) {
    const std::size_t bin = wrap(-static_cast<long long>(k) * periods, static_cast<long long>(len));
    const Complex x(out[bin][0], out[bin][1]);
    amps.push_back(x / static_cast<double>(len) * std::polar(1.0, k * wf * traj.t0));
  }
  return amps;
}

int probe_p_harmonic(const SystemParams& p) {
  const double ratio = p.probe_p_detuning().hz() * p.n / p.omega_b.hz();
  const auto k = std::llround(ratio);
  if (std::abs(ratio - static_cast<double>(k)) > 1e-9 * std::max(1.0, std::abs(ratio)))
    throw ParamError("delta_p", "must be an integer multiple of omega_b / n");
  return static_cast<int>(k);
}

CombSpectrum output_spectrum(CombSpectrum comb, const SystemParams& p) {
  const double sqrt_2k = std::sqrt(2.0 * p.kappa.rad_per_s());
  const int kp = probe_p_harmonic(p);
  for (auto& line : comb.lines) {
    Complex drive = 0.0;
    line.drives = kNoDrive;
    if (line.k == 0) {
      drive += std::polar(p.eps_c.per_second(), p.phase_c);
      line.drives |= kControlDrive;
    }
    if (line.k == kp) {
      drive += std::polar(p.eps_p.per_second(), p.phase_p);
      line.drives |= kProbePDrive;
    }
    if (line.k == 1) {
      drive += std::polar(p.eps_f.per_second(), p.phase_f);
      line.drives |= kProbeFDrive;
    }
    line.amp_out = drive - sqrt_2k * line.amp_alpha;
  }
  return comb;
}

CombMetrics comb_metrics(const CombSpectrum& comb, double threshold_rel) {
  if (!(threshold_rel > 0.0 && threshold_rel < 1.0))
    throw std::invalid_argument("threshold_rel must lie in (0, 1)");
  CombMetrics m;
  m.threshold = threshold_rel;
  m.max_abs_out = comb.max_abs_out();
  if (comb.lines.empty() || m.max_abs_out == 0.0)
    throw EmptySpectrumError("output spectrum has no non-zero line");

  const double cut = threshold_rel * m.max_abs_out;
  int strongest = 0;
  double best = -1.0;
  for (const auto& l : comb.lines) {
    const double a = std::abs(l.amp_out);
    if (a >= cut) m.present.push_back(l.k);
    if (a > best) {
      best = a;
      strongest = l.k;
    }
  }

  const int n = comb.n;
  m.cutoff_pos = {m.present.back(), n};
  m.cutoff_neg = {m.present.front(), n};
  for (std::size_t i = 1; i < m.present.size(); ++i) {
    const int gap = m.present[i] - m.present[i - 1];
    if (m.rep_step == 0 || gap < m.rep_step) m.rep_step = gap;
  }
  m.f_rep = m.rep_step * comb.omega_fund;

  const auto is_present = [&](int k) {
    return std::binary_search(m.present.begin(), m.present.end(), k);
  };
  const int anchor = is_present(0) ? 0 : strongest;
  m.span_lo = m.span_hi = anchor;
  if (m.rep_step > 0) {
    while (is_present(m.span_lo - m.rep_step)) m.span_lo -= m.rep_step;
    while (is_present(m.span_hi + m.rep_step)) m.span_hi += m.rep_step;
  }
  m.f_range = {m.span_lo * comb.omega_fund, m.span_hi * comb.omega_fund};
  return m;
}

void write_spectrum_csv(std::ostream& os, const CombSpectrum& comb, const SystemParams& p) {
  os << "k,order_num,order_den,freq_hz,re_out,im_out,abs_out,abs_out_db,kind\n";
  const double ref = comb.max_abs_out();
  const double fund_hz = p.omega_b.hz() / p.n;
  for (const auto& l : comb.lines) {
    const double a = std::abs(l.amp_out);
    const double db = (ref > 0.0 && a > 0.0) ? 20.0 * std::log10(a / ref)
                                              : -std::numeric_limits<double>::infinity();
    os << fmt::format("{},{},{},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{}\n", l.k, l.k, comb.n,
                      l.k * fund_hz, l.amp_out.real(), l.amp_out.imag(), a, db, to_string(l.kind));
  }
}

}  // namespace omcomb
