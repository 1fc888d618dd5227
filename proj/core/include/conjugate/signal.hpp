#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

namespace conjugate {

using Complex = std::complex<double>;

// Uniform 1-D grid: point(i) = start + i * step for 0 <= i < count.
class Grid {
 public:
  // Throws ParameterError unless step > 0, count >= 2 and both ends finite.
  Grid(double start, double step, std::size_t count);

  // Grid of `count` points centred on `center` and covering `span`
  // (first to last point distance = span * (count - 1) / count).
  static Grid centered(double center, double span, std::size_t count);

  double start() const noexcept { return start_; }
  double step() const noexcept { return step_; }
  std::size_t count() const noexcept { return count_; }

  double point(std::size_t i) const noexcept { return start_ + static_cast<double>(i) * step_; }
  double last() const noexcept { return point(count_ - 1); }
  double midpoint() const noexcept { return start_ + 0.5 * static_cast<double>(count_ - 1) * step_; }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  double start_;
  double step_;
  std::size_t count_;
};

enum class Domain { time, position, generic };

std::string_view to_string(Domain domain) noexcept;

class SampledSignal {
 public:
  // Throws ParameterError if values.size() != grid.count().
  SampledSignal(Grid grid, std::vector<Complex> values, Domain domain = Domain::generic);

  const Grid& grid() const noexcept { return grid_; }
  std::span<const Complex> values() const noexcept { return values_; }
  Domain domain() const noexcept { return domain_; }
  std::size_t size() const noexcept { return values_.size(); }

  const Complex& operator[](std::size_t i) const noexcept { return values_[i]; }

  SampledSignal scaled(Complex factor) const;

 private:
  Grid grid_;
  std::vector<Complex> values_;
  Domain domain_;
};

// Analytic signal families. Scale parameters (sigma, halfwidth, decay) are
// in the grid's domain units; frequencies in cycles per unit.
namespace family {

struct Gaussian {
  double sigma = 1.0;
  double center = 0.0;
};

// 1 on |u - center| <= halfwidth (boundary points included), 0 elsewhere.
struct Rectangle {
  double halfwidth = 1.0;
  double center = 0.0;
};

// exp(-|u - center| / decay).
struct TwoSidedExponential {
  double decay = 1.0;
  double center = 0.0;
};

// cos(2 pi freq u) on |u| <= halfwidth, 0 elsewhere.
struct TruncatedSinusoid {
  double freq = 1.25;
  double halfwidth = 1.0;
};

// Unit-modulus sweep from f0 to f1 across |u| <= halfwidth under a
// raised-cosine envelope cos^2(pi u / (2 halfwidth)).
struct LinearChirp {
  double f0 = 0.5;
  double f1 = 2.0;
  double halfwidth = 2.0;
};

// exp(i k u). Infinite energy in the continuum; never valid for width
// analysis.
struct PlaneWave {
  double wavenumber = 1.0;
};

}  // namespace family

using SignalFamily = std::variant<family::Gaussian, family::Rectangle, family::TwoSidedExponential,
                                  family::TruncatedSinusoid, family::LinearChirp, family::PlaneWave>;

std::string_view family_name(const SignalFamily& family) noexcept;

// Throws ParameterError on non-positive or non-finite scale parameters.
void validate(const SignalFamily& family);

// Closed-form value of the family at coordinate u.
Complex evaluate(const SignalFamily& family, double u);

// Evaluates the family on every grid point. Deterministic.
SampledSignal generate(const SignalFamily& family, const Grid& grid, Domain domain = Domain::generic);

// Analysis grid: 4096 points spanning 40 characteristic scales around the
// family's centre of support.
Grid default_grid(const SignalFamily& family);

inline constexpr std::size_t kDefaultGridCount = 4096;
inline constexpr double kDefaultSpanScales = 40.0;

// Trapezoidal integral of |f|^2 over the grid.
double energy(const SampledSignal& signal);

// Trapezoidal integral of arbitrary samples with uniform spacing.
double trapezoid(std::span<const double> samples, double step);

}  // namespace conjugate
