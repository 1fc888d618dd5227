#include "conjugate/signal.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "conjugate/errors.hpp"

namespace conjugate {

namespace {

constexpr double kPi = std::numbers::pi;

void require_scale(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw ParameterError(std::string(name) + " must be a positive finite number, got " + std::to_string(value));
  }
}

void require_finite(double value, const char* name) {
  if (!std::isfinite(value)) {
    throw ParameterError(std::string(name) + " must be finite");
  }
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

Grid::Grid(double start, double step, std::size_t count) : start_(start), step_(step), count_(count) {
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw ParameterError("grid step must be positive and finite");
  }
  if (count < 2) {
    throw ParameterError("grid needs at least 2 points");
  }
  if (!std::isfinite(start) || !std::isfinite(last())) {
    throw ParameterError("grid coordinates must be finite");
  }
}

Grid Grid::centered(double center, double span, std::size_t count) {
  if (!(span > 0.0) || !std::isfinite(span)) {
    throw ParameterError("grid span must be positive and finite");
  }
  if (count < 2) {
    throw ParameterError("grid needs at least 2 points");
  }
  const double step = span / static_cast<double>(count);
  return Grid(center - 0.5 * span, step, count);
}

std::string_view to_string(Domain domain) noexcept {
  switch (domain) {
    case Domain::time:
      return "time";
    case Domain::position:
      return "position";
    case Domain::generic:
      break;
  }
  return "generic";
}

SampledSignal::SampledSignal(Grid grid, std::vector<Complex> values, Domain domain)
    : grid_(grid), values_(std::move(values)), domain_(domain) {
  if (values_.size() != grid_.count()) {
    throw ParameterError("signal has " + std::to_string(values_.size()) + " values for a grid of " +
                         std::to_string(grid_.count()) + " points");
  }
}

SampledSignal SampledSignal::scaled(Complex factor) const {
  std::vector<Complex> out(values_.begin(), values_.end());
  for (auto& v : out) v *= factor;
  return SampledSignal(grid_, std::move(out), domain_);
}

std::string_view family_name(const SignalFamily& family) noexcept {
  return std::visit(overloaded{
                        [](const family::Gaussian&) { return std::string_view("gaussian"); },
                        [](const family::Rectangle&) { return std::string_view("rectangle"); },
                        [](const family::TwoSidedExponential&) { return std::string_view("two_sided_exponential"); },
                        [](const family::TruncatedSinusoid&) { return std::string_view("truncated_sinusoid"); },
                        [](const family::LinearChirp&) { return std::string_view("linear_chirp"); },
                        [](const family::PlaneWave&) { return std::string_view("plane_wave"); },
                    },
                    family);
}

void validate(const SignalFamily& family) {
  std::visit(overloaded{
                 [](const family::Gaussian& g) {
                   require_scale(g.sigma, "sigma");
                   require_finite(g.center, "center");
                 },
                 [](const family::Rectangle& r) {
                   require_scale(r.halfwidth, "halfwidth");
                   require_finite(r.center, "center");
                 },
                 [](const family::TwoSidedExponential& e) {
                   require_scale(e.decay, "decay");
                   require_finite(e.center, "center");
                 },
                 [](const family::TruncatedSinusoid& s) {
                   require_scale(s.halfwidth, "halfwidth");
                   require_finite(s.freq, "freq");
                 },
                 [](const family::LinearChirp& c) {
                   require_scale(c.halfwidth, "halfwidth");
                   require_finite(c.f0, "f0");
                   require_finite(c.f1, "f1");
                 },
                 [](const family::PlaneWave& p) { require_finite(p.wavenumber, "wavenumber"); },
             },
             family);
}

Complex evaluate(const SignalFamily& family, double u) {
  return std::visit(
      overloaded{
          [u](const family::Gaussian& g) {
            const double d = (u - g.center) / g.sigma;
            return Complex(std::exp(-0.5 * d * d), 0.0);
          },
          [u](const family::Rectangle& r) {
            return Complex(std::abs(u - r.center) <= r.halfwidth ? 1.0 : 0.0, 0.0);
          },
          [u](const family::TwoSidedExponential& e) {
            return Complex(std::exp(-std::abs(u - e.center) / e.decay), 0.0);
          },
          [u](const family::TruncatedSinusoid& s) {
            if (std::abs(u) > s.halfwidth) return Complex(0.0, 0.0);
            return Complex(std::cos(2.0 * kPi * s.freq * u), 0.0);
          },
          [u](const family::LinearChirp& c) {
            if (std::abs(u) > c.halfwidth) return Complex(0.0, 0.0);
            // Instantaneous frequency f0 + (f1 - f0) (u + hw) / (2 hw).
            const double rate = (c.f1 - c.f0) / (2.0 * c.halfwidth);
            const double s = u + c.halfwidth;
            const double phase = 2.0 * kPi * (c.f0 * s + 0.5 * rate * s * s);
            const double taper = std::cos(0.5 * kPi * u / c.halfwidth);
            return std::polar(taper * taper, phase);
          },
          [u](const family::PlaneWave& p) { return std::polar(1.0, p.wavenumber * u); },
      },
      family);
}

SampledSignal generate(const SignalFamily& family, const Grid& grid, Domain domain) {
  validate(family);
  std::vector<Complex> values(grid.count());
  for (std::size_t i = 0; i < grid.count(); ++i) {
    values[i] = evaluate(family, grid.point(i));
  }
  return SampledSignal(grid, std::move(values), domain);
}

Grid default_grid(const SignalFamily& family) {
  validate(family);
  const auto [center, scale] = std::visit(
      overloaded{
          [](const family::Gaussian& g) { return std::pair{g.center, g.sigma}; },
          [](const family::Rectangle& r) { return std::pair{r.center, r.halfwidth}; },
          [](const family::TwoSidedExponential& e) { return std::pair{e.center, e.decay}; },
          [](const family::TruncatedSinusoid& s) { return std::pair{0.0, s.halfwidth}; },
          [](const family::LinearChirp& c) { return std::pair{0.0, c.halfwidth}; },
          [](const family::PlaneWave& p) {
            return std::pair{0.0, p.wavenumber == 0.0 ? 1.0 : 2.0 * kPi / std::abs(p.wavenumber)};
          },
      },
      family);
  return Grid::centered(center, kDefaultSpanScales * scale, kDefaultGridCount);
}

double trapezoid(std::span<const double> samples, double step) {
  if (samples.size() < 2) return 0.0;
  double interior = 0.0;
  for (std::size_t i = 1; i + 1 < samples.size(); ++i) interior += samples[i];
  return step * (interior + 0.5 * (samples.front() + samples.back()));
}

double energy(const SampledSignal& signal) {
  std::vector<double> density(signal.size());
  for (std::size_t i = 0; i < signal.size(); ++i) density[i] = std::norm(signal[i]);
  return trapezoid(density, signal.grid().step());
}

}  // namespace conjugate
