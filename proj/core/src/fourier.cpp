#include "conjugate/fourier.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "conjugate/errors.hpp"

namespace conjugate {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Signed frequency index of output slot k.
std::ptrdiff_t centered_index(std::size_t k, std::size_t n) {
  return static_cast<std::ptrdiff_t>(k) - static_cast<std::ptrdiff_t>(n / 2);
}

std::size_t wrap_index(std::ptrdiff_t kk, std::size_t n) {
  const auto sn = static_cast<std::ptrdiff_t>(n);
  return static_cast<std::size_t>(((kk % sn) + sn) % sn);
}

// exp(sign * 2 pi i * kk * t0 / (N dt)), with the cycle count reduced
// modulo 1 before scaling to radians.
Complex origin_phase(std::ptrdiff_t kk, const Grid& source, int sign) {
  const double cycles_per_index = source.start() / (static_cast<double>(source.count()) * source.step());
  double cycles = static_cast<double>(kk) * cycles_per_index;
  cycles -= std::round(cycles);
  return std::polar(1.0, sign * kTwoPi * cycles);
}

void direct_dft(std::span<const Complex> in, std::span<Complex> out, int sign) {
  const std::size_t n = in.size();
  std::vector<Complex> roots(n);
  for (std::size_t r = 0; r < n; ++r) {
    roots[r] = std::polar(1.0, sign * kTwoPi * static_cast<double>(r) / static_cast<double>(n));
  }
  for (std::size_t k = 0; k < n; ++k) {
    Complex acc(0.0, 0.0);
    std::size_t r = 0;
    for (std::size_t j = 0; j < n; ++j) {
      acc += in[j] * roots[r];
      r += k;
      if (r >= n) r -= n;
    }
    out[k] = acc;
  }
}

std::vector<Complex> unnormalised_dft(std::span<const Complex> in, int sign) {
  std::vector<Complex> out(in.begin(), in.end());
  if (detail::is_power_of_two(out.size())) {
    detail::fft_radix2(out, sign);
  } else {
    direct_dft(in, out, sign);
  }
  return out;
}

}  // namespace

std::string_view to_string(Convention convention) noexcept {
  return convention == Convention::nu ? "nu" : "omega";
}

Convention parse_convention(std::string_view text) {
  if (text == "nu") return Convention::nu;
  if (text == "omega") return Convention::omega;
  throw ParameterError("unknown convention '" + std::string(text) + "' (expected nu or omega)");
}

Spectrum::Spectrum(Grid grid, std::vector<Complex> values, Convention convention, Domain source_domain,
                   Grid source_grid)
    : grid_(grid),
      values_(std::move(values)),
      convention_(convention),
      source_domain_(source_domain),
      source_grid_(source_grid) {
  if (values_.size() != grid_.count() || grid_.count() != source_grid_.count()) {
    throw ParameterError("spectrum size does not match its grids");
  }
}

SampledSignal Spectrum::as_signal() const {
  return SampledSignal(grid_, values_, Domain::generic);
}

Grid conjugate_grid(const Grid& source, Convention convention) {
  const std::size_t n = source.count();
  const double dnu = 1.0 / (static_cast<double>(n) * source.step());
  const double scale = convention == Convention::omega ? kTwoPi : 1.0;
  const double start = -static_cast<double>(n / 2) * dnu;
  return Grid(scale * start, scale * dnu, n);
}

Spectrum transform(const SampledSignal& signal, Convention convention) {
  const Grid& grid = signal.grid();
  const std::size_t n = grid.count();
  const std::vector<Complex> raw = unnormalised_dft(signal.values(), -1);

  std::vector<Complex> values(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::ptrdiff_t kk = centered_index(k, n);
    values[k] = grid.step() * origin_phase(kk, grid, -1) * raw[wrap_index(kk, n)];
  }
  return Spectrum(conjugate_grid(grid, convention), std::move(values), convention, signal.domain(), grid);
}

SampledSignal inverse_transform(const Spectrum& spectrum) {
  const Grid& source = spectrum.source_grid();
  const std::size_t n = spectrum.size();

  std::vector<Complex> shifted(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::ptrdiff_t kk = centered_index(k, n);
    shifted[wrap_index(kk, n)] = spectrum[k] * origin_phase(kk, source, +1);
  }
  std::vector<Complex> values = unnormalised_dft(shifted, +1);

  const double weight = spectrum.convention() == Convention::omega ? spectrum.grid().step() / kTwoPi
                                                                   : spectrum.grid().step();
  for (auto& v : values) v *= weight;
  return SampledSignal(source, std::move(values), spectrum.source_domain());
}

Spectrum naive_dft(const SampledSignal& signal, Convention convention) {
  const Grid& grid = signal.grid();
  const std::size_t n = grid.count();
  if (n > kNaiveDftLimit) {
    throw SizeLimitError("naive_dft refuses " + std::to_string(n) + " points (limit " +
                         std::to_string(kNaiveDftLimit) + ")");
  }
  // nu_k t_j = kk * t0 / (N dt) + kk * j / N; the integer part of the second
  // term is dropped exactly before converting to radians.
  const double t0_cycles = grid.start() / (static_cast<double>(n) * grid.step());
  const auto sn = static_cast<std::ptrdiff_t>(n);
  std::vector<Complex> values(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::ptrdiff_t kk = centered_index(k, n);
    double origin_cycles = static_cast<double>(kk) * t0_cycles;
    origin_cycles -= std::floor(origin_cycles);
    Complex acc(0.0, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      const std::ptrdiff_t r = ((kk * static_cast<std::ptrdiff_t>(j)) % sn + sn) % sn;
      const double cycles = origin_cycles + static_cast<double>(r) / static_cast<double>(n);
      acc += signal[j] * Complex(std::cos(kTwoPi * cycles), -std::sin(kTwoPi * cycles));
    }
    values[k] = acc * grid.step();
  }
  return Spectrum(conjugate_grid(grid, convention), std::move(values), convention, signal.domain(), grid);
}

namespace detail {

bool is_power_of_two(std::size_t n) noexcept { return n != 0 && (n & (n - 1)) == 0; }

void fft_radix2(std::span<Complex> data, int sign) {
  const std::size_t n = data.size();
  if (!is_power_of_two(n)) {
    throw ParameterError("fft_radix2 needs a power-of-two length");
  }
  if (n < 2) return;

  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(data[i], data[j]);
  }

  // Twiddles for the full length; stage of length len uses stride n / len.
  std::vector<Complex> twiddle(n / 2);
  for (std::size_t k = 0; k < n / 2; ++k) {
    twiddle[k] = std::polar(1.0, sign * kTwoPi * static_cast<double>(k) / static_cast<double>(n));
  }

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t stride = n / len;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < half; ++k) {
        const Complex u = data[i + k];
        const Complex v = data[i + k + half] * twiddle[k * stride];
        data[i + k] = u + v;
        data[i + k + half] = u - v;
      }
    }
  }
}

}  // namespace detail

}  // namespace conjugate
