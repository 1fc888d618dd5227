#include "conjugate/widths.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <variant>

#include "conjugate/errors.hpp"

namespace conjugate {

namespace {

constexpr double kPi = std::numbers::pi;

struct Moments {
  double energy;
  double mean;
  double width;
};

// Moments of |f|^2 restricted to indices [first, last).
Moments moments(const SampledSignal& signal, std::size_t first, std::size_t last) {
  const Grid& grid = signal.grid();
  const std::size_t n = last - first;
  std::vector<double> density(n);
  std::vector<double> weighted(n);
  for (std::size_t i = 0; i < n; ++i) {
    density[i] = std::norm(signal[first + i]);
    weighted[i] = density[i] * grid.point(first + i);
  }
  const double e = trapezoid(density, grid.step());
  if (!(e > 0.0) || !std::isfinite(e)) {
    throw DegenerateInputError("signal has zero or non-finite energy");
  }
  const double mean = trapezoid(weighted, grid.step()) / e;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = grid.point(first + i) - mean;
    weighted[i] = density[i] * d * d;
  }
  const double variance = trapezoid(weighted, grid.step()) / e;
  return {e, mean, std::sqrt(std::max(variance, 0.0))};
}

bool converged(const SampledSignal& signal, double full_width) {
  const std::size_t n = signal.size();
  const std::size_t first = n / 4;
  const std::size_t last = n - n / 4;
  if (last - first < 2) return false;
  try {
    const Moments inner = moments(signal, first, last);
    return std::abs(inner.width - full_width) <= kReliabilityTolerance * full_width;
  } catch (const DegenerateInputError&) {
    return false;
  }
}

}  // namespace

double mean_ordinate(const SampledSignal& signal) { return moments(signal, 0, signal.size()).mean; }

double effective_width(const SampledSignal& signal) { return moments(signal, 0, signal.size()).width; }

WidthReport width_report(const SampledSignal& signal) {
  const Moments m = moments(signal, 0, signal.size());
  return WidthReport{m.mean, m.width, m.energy, converged(signal, m.width)};
}

std::string_view to_string(BoundChoice choice) noexcept {
  return choice == BoundChoice::h_over_2 ? "h_over_2" : "hbar_over_2";
}

BoundChoice parse_bound_choice(std::string_view text) {
  if (text == "h_over_2") return BoundChoice::h_over_2;
  if (text == "hbar_over_2") return BoundChoice::hbar_over_2;
  throw ParameterError("unknown bound '" + std::string(text) + "' (expected h_over_2 or hbar_over_2)");
}

double dimensionless_bound(BoundChoice choice, Convention convention) noexcept {
  if (choice == BoundChoice::h_over_2) {
    return convention == Convention::nu ? 0.5 : kPi;
  }
  return convention == Convention::nu ? 1.0 / (4.0 * kPi) : 0.5;
}

double default_bound(Convention convention) noexcept {
  return dimensionless_bound(BoundChoice::hbar_over_2, convention);
}

UncertaintyReport uncertainty_product(const SampledSignal& signal, Convention convention,
                                      std::optional<double> bound_constant) {
  UncertaintyReport report;
  report.convention = convention;
  report.signal_report = width_report(signal);
  report.transform_report = width_report(transform(signal, convention).as_signal());
  report.product = report.signal_report.effective_width * report.transform_report.effective_width;
  report.bound_constant = bound_constant.value_or(default_bound(convention));
  report.satisfied =
      report.product >= report.bound_constant - kSatisfactionRelTol * std::abs(report.bound_constant);
  if (!report.signal_report.reliable) {
    report.warnings.emplace_back("signal width has not converged on the grid");
  }
  if (!report.transform_report.reliable) {
    report.warnings.emplace_back(
        "transform width has not converged on the conjugate grid (second moment likely divergent)");
  }
  report.width_reliable = report.signal_report.reliable && report.transform_report.reliable;
  return report;
}

UncertaintyReport analyze_family(const SignalFamily& family, Convention convention,
                                 std::optional<double> bound_constant) {
  if (std::holds_alternative<family::PlaneWave>(family)) {
    throw ParameterError("plane waves have infinite energy and no effective width");
  }
  return uncertainty_product(generate(family, default_grid(family)), convention, bound_constant);
}

std::vector<SignalFamily> default_corpus() {
  return {family::Gaussian{}, family::TwoSidedExponential{}, family::TruncatedSinusoid{}, family::LinearChirp{}};
}

CorpusAudit corpus_audit(const std::vector<SignalFamily>& families, Convention convention,
                         std::optional<double> bound_constant) {
  if (families.empty()) {
    throw ParameterError("corpus audit needs at least one signal family");
  }
  CorpusAudit audit;
  audit.convention = convention;
  for (const auto& fam : families) {
    CorpusEntry entry;
    entry.family = std::string(family_name(fam));
    try {
      entry.report = analyze_family(fam, convention, bound_constant);
      if (entry.report->width_reliable &&
          (!audit.minimum_product || entry.report->product < *audit.minimum_product)) {
        audit.minimum_product = entry.report->product;
        audit.minimum_family = entry.family;
      }
    } catch (const Error& e) {
      entry.error = e.what();
    }
    audit.entries.push_back(std::move(entry));
  }
  return audit;
}

std::vector<BoundCheck> bound_sweep(const SampledSignal& signal) {
  const double nu_product = uncertainty_product(signal, Convention::nu).product;
  const double omega_product = uncertainty_product(signal, Convention::omega).product;

  auto row = [](std::string label, Convention c, double bound, double product) {
    return BoundCheck{std::move(label), c, bound, product,
                      product >= bound - kSatisfactionRelTol * std::abs(bound)};
  };
  return {
      row("gaussian_minimum", Convention::nu, 1.0 / (4.0 * kPi), nu_product),
      row("stated_cycle_bound", Convention::nu, 0.5, nu_product),
      row("gaussian_minimum", Convention::omega, 0.5, omega_product),
      row("stated_circular_bound", Convention::omega, kPi, omega_product),
      row("cycle_bound_on_circular", Convention::omega, 0.5, omega_product),
  };
}

}  // namespace conjugate
