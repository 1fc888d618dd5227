#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "conjugate/fourier.hpp"
#include "conjugate/signal.hpp"

namespace conjugate {

// Moments of |f|^2 over the grid.
struct WidthReport {
  double mean_ordinate = 0.0;
  double effective_width = 0.0;
  double energy = 0.0;
  // False when the width computed on the inner half of the grid differs
  // from the full-grid width by more than kReliabilityTolerance.
  bool reliable = true;
};

inline constexpr double kReliabilityTolerance = 0.01;

// Relative slack allowed when checking a product against its bound.
inline constexpr double kSatisfactionRelTol = 1e-6;

// Trapezoidal int |f|^2 u du / int |f|^2 du. Throws DegenerateInputError on
// zero energy.
double mean_ordinate(const SampledSignal& signal);

// sqrt(int |f|^2 (u - M)^2 du / int |f|^2 du). Throws DegenerateInputError on
// zero energy.
double effective_width(const SampledSignal& signal);

// Mean ordinate, width, energy and the convergence check in one pass.
WidthReport width_report(const SampledSignal& signal);

// Which physical constant the dimensionless bound stands for: E = h nu
// (hbar omega) turns h/2 into 1/2 (pi) and hbar/2 into 1/(4 pi) (1/2).
enum class BoundChoice { h_over_2, hbar_over_2 };

std::string_view to_string(BoundChoice choice) noexcept;
BoundChoice parse_bound_choice(std::string_view text);

double dimensionless_bound(BoundChoice choice, Convention convention) noexcept;

// Smallest product reachable under verbatim width definitions: 1/2 for
// omega, 1/(4 pi) for nu (the Gaussian).
double default_bound(Convention convention) noexcept;

struct UncertaintyReport {
  WidthReport signal_report;
  WidthReport transform_report;
  Convention convention = Convention::omega;
  double product = 0.0;
  double bound_constant = 0.0;
  bool satisfied = false;
  bool width_reliable = true;
  std::vector<std::string> warnings;
};

UncertaintyReport uncertainty_product(const SampledSignal& signal, Convention convention,
                                      std::optional<double> bound_constant = std::nullopt);

// Generates the family on its default grid and analyses it. Plane waves
// are rejected with ParameterError.
UncertaintyReport analyze_family(const SignalFamily& family, Convention convention,
                                 std::optional<double> bound_constant = std::nullopt);

struct CorpusEntry {
  std::string family;
  std::optional<UncertaintyReport> report;
  std::string error;
};

struct CorpusAudit {
  Convention convention = Convention::omega;
  std::vector<CorpusEntry> entries;
  // Over entries with reliable widths only; empty if there are none.
  std::optional<double> minimum_product;
  std::string minimum_family;
};

// {gaussian, two_sided_exponential, truncated_sinusoid, linear_chirp} with
// their default parameters.
std::vector<SignalFamily> default_corpus();

// Per-family errors are recorded, not thrown. Throws ParameterError on an
// empty corpus.
CorpusAudit corpus_audit(const std::vector<SignalFamily>& families, Convention convention,
                         std::optional<double> bound_constant = std::nullopt);

// One row of the bound-constant diagnostic.
struct BoundCheck {
  std::string label;
  Convention convention = Convention::omega;
  double bound = 0.0;
  double product = 0.0;
  bool satisfied = false;
};

// Evaluates the signal's product under both conventions against every
// candidate constant in circulation:
//   gaussian_minimum (nu, 1/(4 pi))     stated_cycle_bound (nu, 1/2)
//   gaussian_minimum (omega, 1/2)       stated_circular_bound (omega, pi)
//   cycle_bound_on_circular (omega, 1/2), the nu constant carried over
//   to omega unchanged.
// Diagnostic only: the last row coincides numerically with the omega
// minimum, which is why the mix-up goes unnoticed.
std::vector<BoundCheck> bound_sweep(const SampledSignal& signal);

}  // namespace conjugate
