#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "conjugate/signal.hpp"

namespace conjugate {

// nu:    F(nu)    = int f(t) exp(-2 pi i nu t) dt,  f(t) = int F(nu) exp(2 pi i nu t) dnu
// omega: G(omega) = int g(t) exp(-i omega t) dt,    g(t) = (1/2pi) int G(omega) exp(i omega t) domega
enum class Convention { nu, omega };

std::string_view to_string(Convention convention) noexcept;

// Throws ParameterError for anything other than "nu" / "omega".
Convention parse_convention(std::string_view text);

// Transform-domain samples. The grid holds conjugate coordinates (cycles per
// unit for nu, radians per unit for omega), centred on zero with index
// floor(N/2) at the origin. The source grid is kept so the inverse can
// restore the original coordinates.
class Spectrum {
 public:
  Spectrum(Grid grid, std::vector<Complex> values, Convention convention, Domain source_domain, Grid source_grid);

  const Grid& grid() const noexcept { return grid_; }
  std::span<const Complex> values() const noexcept { return values_; }
  Convention convention() const noexcept { return convention_; }
  Domain source_domain() const noexcept { return source_domain_; }
  const Grid& source_grid() const noexcept { return source_grid_; }
  std::size_t size() const noexcept { return values_.size(); }
  const Complex& operator[](std::size_t i) const noexcept { return values_[i]; }

  // The spectrum viewed as a signal over its conjugate grid.
  SampledSignal as_signal() const;

 private:
  Grid grid_;
  std::vector<Complex> values_;
  Convention convention_;
  Domain source_domain_;
  Grid source_grid_;
};

// Conjugate grid of a source grid: step 1/(N dt) (times 2 pi for omega),
// first point -floor(N/2) steps from zero.
Grid conjugate_grid(const Grid& source, Convention convention);

// Continuous-normalised transform: dt * sum_j f_j exp(-2 pi i nu_k t_j).
// Radix-2 FFT for power-of-two sizes, direct summation otherwise.
Spectrum transform(const SampledSignal& signal, Convention convention);

// Exact inverse of transform() for the same grid.
SampledSignal inverse_transform(const Spectrum& spectrum);

inline constexpr std::size_t kNaiveDftLimit = 16384;

// Direct O(N^2) evaluation of the same discretised integral as transform().
// Throws SizeLimitError above kNaiveDftLimit points.
Spectrum naive_dft(const SampledSignal& signal, Convention convention);

namespace detail {

bool is_power_of_two(std::size_t n) noexcept;

// In-place unnormalised DFT, sign -1 forward / +1 backward. Power-of-two
// sizes only.
void fft_radix2(std::span<Complex> data, int sign);

}  // namespace detail

}  // namespace conjugate
