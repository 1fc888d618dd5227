#include "conjugate/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

#include "conjugate/errors.hpp"

namespace conjugate {

namespace {

constexpr double kPi = std::numbers::pi;

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw ParameterError(std::string(name) + " must be positive and finite");
  }
}

// Value of the interpolant at u = (t - t0) / step, in sample units.
Complex interpolate_at(std::span<const Complex> samples, double u) {
  const double nearest = std::round(u);
  const double r = u - nearest;
  const auto n = static_cast<std::ptrdiff_t>(samples.size());
  if (r == 0.0) {
    const auto m = static_cast<std::ptrdiff_t>(nearest);
    return (m >= 0 && m < n) ? samples[static_cast<std::size_t>(m)] : Complex(0.0, 0.0);
  }
  // sin(pi (u - j)) = (-1)^(m + j) sin(pi r) with m = round(u).
  const double s = std::sin(kPi * r) / kPi;
  const bool m_odd = std::fmod(std::abs(nearest), 2.0) == 1.0;
  Complex acc(0.0, 0.0);
  for (std::ptrdiff_t j = 0; j < n; ++j) {
    const bool odd = m_odd != ((j & 1) == 1);
    const double w = (odd ? -s : s) / (u - static_cast<double>(j));
    acc += samples[static_cast<std::size_t>(j)] * w;
  }
  return acc;
}

}  // namespace

double nyquist_rate(double max_frequency) {
  if (!(max_frequency >= 0.0) || !std::isfinite(max_frequency)) {
    throw ParameterError("maximum frequency must be non-negative and finite");
  }
  return 2.0 * max_frequency;
}

SamplingScenario scenario_from_sampling(double sample_interval, std::optional<double> truncation_limit) {
  require_positive(sample_interval, "sample interval");
  SamplingScenario s;
  s.sample_interval = sample_interval;
  s.nyquist_conjugate_limit = 1.0 / (2.0 * sample_interval);
  if (truncation_limit) {
    require_positive(*truncation_limit, "truncation limit");
    s.truncation_limit = truncation_limit;
    s.conjugate_sample_interval = 1.0 / (2.0 * *truncation_limit);
  }
  return s;
}

double nyquist_wavenumber(const SamplingScenario& scenario) noexcept { return kPi / scenario.sample_interval; }

bool resolvable(const SamplingScenario& scenario, double conjugate_value) noexcept {
  return conjugate_value >= 0.0 && conjugate_value <= scenario.nyquist_conjugate_limit;
}

bool within_truncation(const SamplingScenario& scenario, double coordinate) noexcept {
  return !scenario.truncation_limit || coordinate <= *scenario.truncation_limit;
}

SampledSignal sample(const SampledSignal& signal, std::size_t decimation_factor) {
  if (decimation_factor < 1) {
    throw ParameterError("decimation factor must be at least 1");
  }
  const Grid& grid = signal.grid();
  const std::size_t count = (grid.count() - 1) / decimation_factor + 1;
  if (count < 2) {
    throw ParameterError("decimation factor " + std::to_string(decimation_factor) + " leaves fewer than 2 of " +
                         std::to_string(grid.count()) + " samples");
  }
  std::vector<Complex> values(count);
  for (std::size_t i = 0; i < count; ++i) values[i] = signal[i * decimation_factor];
  return SampledSignal(Grid(grid.start(), grid.step() * static_cast<double>(decimation_factor), count),
                       std::move(values), signal.domain());
}

SampledSignal truncate(const SampledSignal& signal, double limit, std::optional<double> center) {
  require_positive(limit, "truncation limit");
  const Grid& grid = signal.grid();
  const double c = center.value_or(grid.midpoint());
  std::vector<Complex> values(signal.values().begin(), signal.values().end());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (std::abs(grid.point(i) - c) > limit) values[i] = Complex(0.0, 0.0);
  }
  return SampledSignal(grid, std::move(values), signal.domain());
}

AliasReport alias_fold(double true_frequency, double sampling_rate) {
  require_positive(sampling_rate, "sampling rate");
  if (!(true_frequency >= 0.0) || !std::isfinite(true_frequency)) {
    throw ParameterError("frequency must be non-negative and finite");
  }
  // fmod is exact, and rate - r is exact for r >= rate / 2 (Sterbenz), so
  // folding is periodic in rate and idempotent without rounding drift.
  const double r = std::fmod(true_frequency, sampling_rate);
  const double half = 0.5 * sampling_rate;
  AliasReport report;
  report.true_frequency = true_frequency;
  report.sampling_rate = sampling_rate;
  report.apparent_frequency = r <= half ? r : sampling_rate - r;
  report.aliased = true_frequency > half;
  return report;
}

SampledSignal reconstruct(const SampledSignal& sampled, const Grid& target_grid, unsigned threads) {
  const Grid& source = sampled.grid();
  const std::span<const Complex> samples = sampled.values();
  std::vector<Complex> values(target_grid.count());

  auto work = [&](std::size_t first, std::size_t last) {
    for (std::size_t i = first; i < last; ++i) {
      const double u = (target_grid.point(i) - source.start()) / source.step();
      values[i] = interpolate_at(samples, u);
    }
  };

  unsigned workers = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  const std::size_t total = values.size();
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, total));
  if (workers <= 1) {
    work(0, total);
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (total + workers - 1) / workers;
    for (std::size_t first = 0; first < total; first += chunk) {
      pool.emplace_back(work, first, std::min(total, first + chunk));
    }
  }
  return SampledSignal(target_grid, std::move(values), sampled.domain());
}

}  // namespace conjugate
