#pragma once

#include <cstddef>
#include <optional>

#include "conjugate/signal.hpp"

namespace conjugate {

// Limits induced in the conjugate domain by sampling at `sample_interval`
// and, optionally, truncating at `truncation_limit`.
struct SamplingScenario {
  double sample_interval = 1.0;                    // dx
  std::optional<double> truncation_limit;          // x_N
  double nyquist_conjugate_limit = 0.5;            // 1 / (2 dx), cycles per unit
  std::optional<double> conjugate_sample_interval;  // 1 / (2 x_N)
};

struct AliasReport {
  double true_frequency = 0.0;
  double sampling_rate = 1.0;
  double apparent_frequency = 0.0;  // in [0, sampling_rate / 2]
  bool aliased = false;             // true_frequency > sampling_rate / 2
};

// f_S = 2 f_max. Throws ParameterError on negative or non-finite input.
double nyquist_rate(double max_frequency);

// Throws ParameterError on non-positive intervals.
SamplingScenario scenario_from_sampling(double sample_interval, std::optional<double> truncation_limit = std::nullopt);

// pi / dx: the largest resolvable wavenumber (radians per unit).
double nyquist_wavenumber(const SamplingScenario& scenario) noexcept;

// Conjugate value inside the resolvable band [0, x~_N].
bool resolvable(const SamplingScenario& scenario, double conjugate_value) noexcept;

// Coordinate inside the truncation range; always true without truncation.
bool within_truncation(const SamplingScenario& scenario, double coordinate) noexcept;

// Keeps samples 0, factor, 2 factor, ...; the new step is step * factor.
// Throws ParameterError if factor < 1 or fewer than 2 samples would remain.
SampledSignal sample(const SampledSignal& signal, std::size_t decimation_factor);

// Zeroes every sample with |u - center| > limit. Center defaults to the
// grid midpoint. Throws ParameterError unless limit > 0.
SampledSignal truncate(const SampledSignal& signal, double limit, std::optional<double> center = std::nullopt);

// Folds a frequency into [0, rate / 2]. A frequency exactly at rate / 2 is
// not aliased. Throws ParameterError if rate <= 0 or frequency < 0.
AliasReport alias_fold(double true_frequency, double sampling_rate);

// Whittaker-Shannon interpolation sum_n s[n] sinc((t - t_n) / step) on the
// target grid. Each output point is summed in index order, so the result
// does not depend on `threads`; 0 means hardware concurrency.
SampledSignal reconstruct(const SampledSignal& sampled, const Grid& target_grid, unsigned threads = 0);

}  // namespace conjugate
