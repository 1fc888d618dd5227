// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "conjugate/fourier.hpp"
#include "conjugate/quantum.hpp"
#include "conjugate/sampling.hpp"
#include "conjugate/signal.hpp"
#include "conjugate/widths.hpp"
#include "oracles.hpp"

#ifdef CONJUGATE_HAVE_CLI
#include "cli.hpp"
#endif

using namespace conjugate;
using oracle::kPi;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += "FAILED " + what;
    }
  }
  void note(const std::string& text) {
    if (!detail.empty()) detail += "; ";
    detail += text;
  }
};

std::string fmt(const char* format, double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, value);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

double sum_norm(std::span<const Complex> v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return s;
}

double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

SampledSignal cosine(double freq, const Grid& g) {
  std::vector<Complex> v(g.count());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = Complex(std::cos(2.0 * kPi * freq * g.point(i)), 0.0);
  return SampledSignal(g, std::move(v), Domain::time);
}

double central_rms(const SampledSignal& a, const std::function<double(double)>& reference) {
  const Grid& g = a.grid();
  const double lo = g.start() + 0.1 * (g.last() - g.start());
  const double hi = g.last() - 0.1 * (g.last() - g.start());
  std::vector<double> err;
  for (std::size_t i = 0; i < g.count(); ++i) {
    const double t = g.point(i);
    if (t >= lo && t <= hi) err.push_back(std::abs(a[i] - Complex(reference(t), 0.0)));
  }
  return oracle::rms(err);
}

Verdict gaussian_minimality() {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  const family::Gaussian g{1.0, 0.0};
  const Grid grid = default_grid(g);
  const auto report = uncertainty_product(generate(g, grid), Convention::omega);
  const double elapsed = seconds_since(start);
  v.require(grid.count() == 4096, "default grid has 4096 points");
  v.require(std::abs(grid.step() * 4096.0 - 40.0) < 1e-12, "default grid spans 40 sigma");
  v.require(std::abs(report.product - 0.5) <= 1e-4, "product = 0.5 +- 1e-4");
  v.require(elapsed < 1.0, "runtime < 1 s");
  v.note("product=" + fmt("%.12g", report.product) + " runtime=" + fmt("%.3g", elapsed) + "s");
  return v;
}

Verdict convention_ratio() {
  Verdict v;
  double worst = 0.0;
  int compared = 0;
  for (const auto& fam : default_corpus()) {
    const auto sig = generate(fam, default_grid(fam));
    const auto om = uncertainty_product(sig, Convention::omega);
    const auto nu = uncertainty_product(sig, Convention::nu);
    if (!(om.width_reliable && nu.width_reliable)) continue;
    ++compared;
    worst = std::max(worst, std::abs(om.product - 2.0 * kPi * nu.product) / om.product);
  }
  const auto g = uncertainty_product(generate(family::Gaussian{}, default_grid(family::Gaussian{})), Convention::nu);
  v.require(compared >= 1, "at least one reliable corpus signal");
  v.require(worst <= 1e-9, "omega = 2 pi nu within rel 1e-9");
  v.require(std::abs(g.product - 1.0 / (4.0 * kPi)) <= 1e-4, "gaussian nu product = 1/(4 pi) +- 1e-4");
  v.note(std::to_string(compared) + " signals, worst rel=" + fmt("%.3g", worst) +
         ", gaussian nu=" + fmt("%.12g", g.product));
  return v;
}

Verdict corpus_bound() {
  Verdict v;
  const auto audit = corpus_audit(default_corpus(), Convention::omega);
  v.require(audit.entries.size() == 4, "corpus has four families");
  for (const auto& e : audit.entries) v.require(e.report.has_value(), e.family + " analysed");
  v.require(audit.minimum_product.has_value() && *audit.minimum_product >= 0.5 - 1e-3, "minimum >= 0.5 - 1e-3");
  v.require(audit.minimum_family == "gaussian", "minimum attained by gaussian");
  const family::Rectangle rect{};
  const auto r = uncertainty_product(generate(rect, default_grid(rect)), Convention::omega);
  v.require(!r.width_reliable, "rectangle flagged width-unreliable");
  v.note("minimum=" + fmt("%.9g", audit.minimum_product.value_or(NAN)) + " (" + audit.minimum_family + ")");
  return v;
}

Verdict fourier_kernel() {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(2024);
  std::normal_distribution<double> gauss;
  double fast_naive = 0.0, roundtrip = 0.0, parseval = 0.0;
  for (std::size_t n = 2; n <= 4096; n *= 2) {
    std::vector<Complex> values(n);
    for (auto& z : values) z = Complex(gauss(rng), gauss(rng));
    const SampledSignal sig(Grid(-0.41 * static_cast<double>(n) * 0.05, 0.05, n), std::move(values));
    const double lhs = sum_norm(sig.values()) * sig.grid().step();
    for (auto conv : {Convention::nu, Convention::omega}) {
      const Spectrum s = transform(sig, conv);
      fast_naive = std::max(fast_naive, max_abs_diff(s.values(), naive_dft(sig, conv).values()));
      roundtrip = std::max(roundtrip, max_abs_diff(inverse_transform(s).values(), sig.values()));
      const double scale = conv == Convention::omega ? 1.0 / (2.0 * kPi) : 1.0;
      parseval = std::max(parseval, std::abs(sum_norm(s.values()) * s.grid().step() * scale - lhs) / lhs);
    }
  }
  const double elapsed = seconds_since(start);
  v.require(fast_naive < 1e-10, "fast = naive within 1e-10");
  v.require(roundtrip < 1e-10, "roundtrip < 1e-10");
  v.require(parseval <= 1e-9, "Parseval rel 1e-9");
  v.require(elapsed < 30.0, "suite < 30 s");
  v.note("fast-naive=" + fmt("%.3g", fast_naive) + " roundtrip=" + fmt("%.3g", roundtrip) + " parseval=" +
         fmt("%.3g", parseval) + " runtime=" + fmt("%.3g", elapsed) + "s");
  return v;
}

// 1/(2 dx) is exactly representable only for power-of-two dx; otherwise the
// library returns the correctly rounded reciprocal and the product is 1/2 up
// to that single rounding (residual bounded by 2^-54, computed exactly with fma).
Verdict sampling_duality() {
  Verdict v;
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> mantissa(1.0, 2.0);
  std::uniform_int_distribution<int> exponent(-40, 40);
  int exact = 0;
  double worst_residual = 0.0;
  for (int i = 0; i < 50; ++i) {
    const bool dyadic = i % 2 == 0;
    const double dx = std::ldexp(dyadic ? 1.0 : mantissa(rng), exponent(rng));
    const double xn = std::ldexp(dyadic ? 1.0 : mantissa(rng), exponent(rng));
    const auto s = scenario_from_sampling(dx, xn);
    const double a = s.nyquist_conjugate_limit * dx;
    const double b = *s.conjugate_sample_interval * xn;
    if (dyadic) {
      v.require(a == 0.5 && b == 0.5, "bit-exact duality for power-of-two intervals");
      exact += (a == 0.5 && b == 0.5);
    }
    const double ra = std::abs(std::fma(s.nyquist_conjugate_limit, dx, -0.5));
    const double rb = std::abs(std::fma(*s.conjugate_sample_interval, xn, -0.5));
    worst_residual = std::max({worst_residual, ra, rb});
  }
  v.require(worst_residual <= std::ldexp(1.0, -54), "residual within one rounding");

  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> periods(1, 1000);
  int idempotent = 0, periodic = 0;
  for (int i = 0; i < 1000; ++i) {
    const double rate = oracle::dyadic(rng, 0.5, 500.0, 12);
    const double f = oracle::dyadic(rng, 0.0, 2000.0, 12);
    const double folded = alias_fold(f, rate).apparent_frequency;
    idempotent += alias_fold(folded, rate).apparent_frequency == folded;
    periodic += alias_fold(f + periods(rng) * rate, rate).apparent_frequency == folded;
    const double g = unit(rng) * 1e4;
    const double r = unit(rng) * 100.0 + 1e-3;
    const double h = alias_fold(g, r).apparent_frequency;
    idempotent += alias_fold(h, r).apparent_frequency == h;
  }
  v.require(idempotent == 2000, "alias_fold idempotent");
  v.require(periodic == 1000, "alias_fold periodic");
  v.note(std::to_string(exact) + "/25 bit-exact, worst residual=" + fmt("%.3g", worst_residual) + ", idempotent " +
         std::to_string(idempotent) + "/2000, periodic " + std::to_string(periodic) + "/1000");
  return v;
}

Verdict reconstruction() {
  Verdict v;
  const Grid samples(0.0, 1.0 / 25.0, 10000);
  const Grid fine(0.0, 0.01, 40000);
  const auto below = reconstruct(cosine(10.0, samples), fine);
  const double rms_below = central_rms(below, [](double t) { return std::cos(2.0 * kPi * 10.0 * t); });
  const auto above = reconstruct(cosine(20.0, samples), fine);
  const double rms_alias = central_rms(above, [](double t) { return std::cos(2.0 * kPi * 5.0 * t); });
  v.require(rms_below < 1e-3, "10 Hz @ 25 Hz RMS < 1e-3");
  v.require(rms_alias < 1e-2, "20 Hz @ 25 Hz vs 5 Hz alias RMS < 1e-2");
  v.note("rms(10 Hz)=" + fmt("%.3g", rms_below) + " rms(20 Hz vs 5 Hz)=" + fmt("%.3g", rms_alias));
  return v;
}

// Rounding k + 2 pi m / a alone perturbs the phase at site j by about
// eps * (|k| a + 2 pi |m|) * j, so the ranges keep that well under 1e-12.
Verdict brillouin_lattice() {
  Verdict v;
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> ua(1e-10, 1e-9), uk(-3.0, 3.0);
  std::uniform_int_distribution<int> um(-5, 5);
  constexpr std::size_t kSites = 32;
  double worst_sample = 0.0, worst_reduced = 0.0;
  bool inside = true;
  int agree = 0;
  for (int i = 0; i < 1000; ++i) {
    const double a = ua(rng);
    const BrillouinZone zone(a);
    const double k = uk(rng) * kPi / a;
    const double shifted = k + 2.0 * kPi * um(rng) / a;
    for (std::size_t j = 0; j < kSites; ++j) {
      const double x = static_cast<double>(j) * a;
      worst_sample = std::max(worst_sample, std::abs(std::polar(1.0, k * x) - std::polar(1.0, shifted * x)));
    }
    const auto r1 = brillouin_reduce(k, zone);
    const auto r2 = brillouin_reduce(shifted, zone);
    for (double r : {r1.reduced_k, r2.reduced_k}) inside = inside && r > -zone.boundary() && r <= zone.boundary();
    const double gap = std::abs(r1.reduced_k - r2.reduced_k);
    worst_reduced = std::max(worst_reduced, std::min(gap, zone.reciprocal_vector() - gap) / zone.boundary());
    agree += lattice_alias_check(k, shifted, zone, kSites);
  }
  v.require(worst_sample <= 1e-12, "sampled sequences equal within 1e-12");
  v.require(worst_reduced <= 1e-12, "reduced wavenumbers agree");
  v.require(inside, "reduced_k in (-pi/a, pi/a]");
  v.require(agree == 1000, "lattice_alias_check reports every shifted pair");
  v.note("max sample diff=" + fmt("%.3g", worst_sample) + " max reduced diff (rel pi/a)=" + fmt("%.3g", worst_reduced));
  return v;
}

Verdict hydrogenic() {
  Verdict v;
  const PhysicalConstants c;
  const auto t = observability(2, 1, 1, c);
  const double tau_ratio = t.lifetime_tau_n / 1.6e-9;
  const double e_ev = t.transition_energy_E_mn / kElectronVolt;
  v.require(tau_ratio >= 1.0 / 3.0 && tau_ratio <= 3.0, "tau_2 within factor 3 of 1.6 ns");
  v.require(std::abs(e_ev - 10.2) <= 10.2 * 1e-3, "E_21 = 10.2 eV +- 0.1%");
  v.require(t.margin > 1e6, "margin(2,1) > 1e6");

  bool positive = true, decreasing = true;
  double previous = INFINITY, ratio50 = 0.0;
  for (int n = 2; n <= 50; ++n) {
    const auto adj = observability(n, n - 1, 1, c);
    positive = positive && adj.margin > 0.0;
    // Independent arithmetic: (h/2) k ln n / n^5 over E_{n-1,n}.
    const double k = (64.0 / 3.0) * std::sqrt(kPi / 3.0) * std::pow(c.fine_structure_alpha, 3) * c.light_speed_c *
                     c.rydberg_R_H;
    const double e = c.planck_h * c.light_speed_c * c.rydberg_R_H *
                     (1.0 / ((n - 1.0) * (n - 1.0)) - 1.0 / (static_cast<double>(n) * n));
    const double ratio = (c.planck_h / 2.0) * k * std::log(n) / std::pow(n, 5) / e;
    v.require(std::abs(ratio * adj.margin - 1.0) <= 1e-12, "library margin matches oracle ratio at n=" +
                                                             std::to_string(n));
    if (n >= 5) decreasing = decreasing && ratio < previous;
    previous = ratio;
    if (n == 50) ratio50 = ratio;
  }
  v.require(positive, "margin positive for 2 <= n <= 50");
  v.require(decreasing, "ratio decreasing for n >= 5");
  v.require(ratio50 < 1e-6, "ratio < 1e-6 at n = 50");
  v.note("tau_2=" + fmt("%.4g", t.lifetime_tau_n) + "s E_21=" + fmt("%.6g", e_ev) + "eV margin=" +
         fmt("%.4g", t.margin) + " ratio(50)=" + fmt("%.3g", ratio50));
  return v;
}

Verdict physical_units() {
  Verdict v;
  const PhysicalConstants c;
  const double sigma = 1e-10;
  const auto packet = generate(family::Gaussian{sigma, 0.0}, Grid::centered(0.0, 40.0 * sigma, 4096),
                               Domain::position);
  const auto pair = uncertainty_in_units(packet, PairKind::position_momentum, c);
  v.require(std::abs(pair.product / (c.hbar / 2.0) - 1.0) <= 1e-4, "product = hbar/2 within rel 1e-4");
  v.require(pair.satisfied_hbar_over_2, "hbar/2 bound evaluated and satisfied");
  v.require(pair.bound_h_over_2 == c.planck_h / 2.0, "h/2 bound evaluated");
  v.require(!pair.satisfied_h_over_2, "h/2 bound marked unsatisfied");
  const auto h_pair = uncertainty_in_units(packet, PairKind::position_momentum, c, BoundChoice::h_over_2);
  v.require(!h_pair.satisfied && h_pair.bound == c.planck_h / 2.0, "h/2 selectable as the primary bound");
  v.note("product/(hbar/2)=" + fmt("%.9g", pair.product / (c.hbar / 2.0)));
  return v;
}

Verdict determinism() {
  Verdict v;
#ifdef CONJUGATE_HAVE_CLI
  const std::vector<std::vector<std::string>> invocations = {
      {"widths", "--family", "two_sided_exponential:decay=0.5"},
      {"uncertainty", "--family", "linear_chirp", "--convention", "nu", "--sweep"},
      {"uncertainty", "--family", "gaussian:sigma=2e-10", "--span", "8e-9", "--pair", "position_momentum"},
      {"corpus-audit", "--convention", "omega"},
      {"sample", "--family", "gaussian", "--factor", "3", "--truncate", "4", "--output", "csv"},
      {"alias", "--f", "130", "--rate", "100"},
      {"reconstruct", "--family", "truncated_sinusoid", "--count", "2048"},
      {"brillouin", "--a", "2e-10", "--k", "8e10", "--k2", "3e10"},
      {"hydrogen", "--n-max", "20"},
      {"hydrogen", "--n", "1", "--m", "0"},
      {"uncertainty", "--convention", "banana"},
  };
  int identical = 0;
  for (const auto& args : invocations) {
    std::ostringstream out1, err1, out2, err2;
    const int s1 = cli::main_entry(args, out1, err1);
    const int s2 = cli::main_entry(args, out2, err2);
    const bool same = s1 == s2 && out1.str() == out2.str() && err1.str() == err2.str();
    v.require(same, "repeatable: " + args.front());
    identical += same;
  }
  v.note(std::to_string(identical) + "/" + std::to_string(invocations.size()) + " invocations byte-identical");
#else
  v.require(false, "CLI not built");
#endif
  return v;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Verdict (*check)();
  };
  const Criterion criteria[] = {
      {"gaussian minimality (omega)", gaussian_minimality},
      {"convention ratio", convention_ratio},
      {"corpus bound", corpus_bound},
      {"fourier kernel", fourier_kernel},
      {"sampling duality", sampling_duality},
      {"reconstruction", reconstruction},
      {"brillouin / lattice", brillouin_lattice},
      {"hydrogenic", hydrogenic},
      {"physical-unit audit", physical_units},
      {"determinism", determinism},
  };
  int failures = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    Verdict verdict;
    try {
      verdict = c.check();
    } catch (const std::exception& e) {
      verdict.pass = false;
      verdict.detail = std::string("threw: ") + e.what();
    }
    failures += !verdict.pass;
    std::printf("%s %2d %s: %s\n", verdict.pass ? "PASS" : "FAIL", index, c.name, verdict.detail.c_str());
  }
  std::printf("%d/%d criteria passed\n", index - failures, index);
  return failures == 0 ? 0 : 1;
}
