#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "conjugate/sampling.hpp"
#include "conjugate/signal.hpp"
#include "conjugate/widths.hpp"

namespace conjugate {

// SI values. Defaults are CODATA 2018; h, c and the electron-volt are
// exact by definition. R_H is the reduced-mass Rydberg constant
// R_inf / (1 + m_e / m_p).
struct PhysicalConstants {
  std::string version = "CODATA-2018";
  double planck_h = 6.62607015e-34;                           // J s
  double hbar = 6.62607015e-34 / (2.0 * 3.141592653589793);  // J s
  double fine_structure_alpha = 7.2973525693e-3;
  double light_speed_c = 299792458.0;       // m / s
  double rydberg_R_H = 10967758.340280328;  // 1 / m
};

inline constexpr double kElectronVolt = 1.602176634e-19;  // J

// Throws ParameterError unless every constant is positive and
// hbar == h / (2 pi) to 1e-12 relative.
void validate(const PhysicalConstants& constants);

// p = hbar k.
double momentum_from_wavenumber(double wavenumber, const PhysicalConstants& constants) noexcept;

// p = h / lambda. Throws ParameterError unless lambda > 0.
double momentum_from_wavelength(double wavelength, const PhysicalConstants& constants);

enum class PairKind { position_momentum, time_energy };

std::string_view to_string(PairKind kind) noexcept;
PairKind parse_pair_kind(std::string_view text);

// Width product of a conjugate pair in physical units, evaluated against
// both h/2 and hbar/2. `bound` / `satisfied` echo the selected choice.
struct ConjugatePair {
  PairKind kind = PairKind::position_momentum;
  double width_a = 0.0;  // dx (m) or dt (s)
  double width_b = 0.0;  // dp (kg m / s) or dE (J)
  double product = 0.0;
  BoundChoice bound_choice = BoundChoice::hbar_over_2;
  double bound = 0.0;
  bool satisfied = false;
  double bound_h_over_2 = 0.0;
  bool satisfied_h_over_2 = false;
  double bound_hbar_over_2 = 0.0;
  bool satisfied_hbar_over_2 = false;
  bool width_reliable = true;
};

// The signal's grid is read in metres (position_momentum) or seconds
// (time_energy). dp = h * d(1/lambda) and dE = h * d(nu), both from the
// cycle-convention transform width.
ConjugatePair uncertainty_in_units(const SampledSignal& signal, PairKind kind, const PhysicalConstants& constants,
                                   BoundChoice bound_choice = BoundChoice::hbar_over_2);

// Sampling limits restated for a particle: sampling position at dx caps
// wavenumber at pi / dx and momentum at h / (2 dx); truncating at x_N
// spaces wavenumber by pi / x_N and momentum by h / (2 x_N).
struct PhysicalLimits {
  double position_sample_interval = 0.0;
  double nyquist_wavenumber = 0.0;
  double nyquist_momentum = 0.0;
  std::optional<double> truncation_limit;
  std::optional<double> wavenumber_sample_interval;
  std::optional<double> momentum_sample_interval;
};

PhysicalLimits physical_limits(const SamplingScenario& scenario, const PhysicalConstants& constants);

class BrillouinZone {
 public:
  // Throws ParameterError unless a > 0.
  explicit BrillouinZone(double lattice_spacing);

  double lattice_spacing() const noexcept { return spacing_; }
  // pi / a
  double boundary() const noexcept { return boundary_; }
  // 2 pi / a, computed as exactly twice the boundary.
  double reciprocal_vector() const noexcept { return 2.0 * boundary_; }

 private:
  double spacing_;
  double boundary_;
};

struct ReducedWavenumber {
  double reduced_k = 0.0;  // in (-pi/a, pi/a]
  long long zone_index = 0;
};

// k = reduced_k + zone_index * 2 pi / a with reduced_k in (-pi/a, pi/a].
ReducedWavenumber brillouin_reduce(double wavenumber, const BrillouinZone& zone);

inline constexpr double kLatticeAliasTolerance = 1e-12;

// True iff exp(i k1 x_j) and exp(i k2 x_j) agree within 1e-12 at
// x_j = j a, j = 0 .. n_sites - 1. Throws ParameterError if n_sites < 2.
bool lattice_alias_check(double k1, double k2, const BrillouinZone& zone, std::size_t n_sites);

// (2^6 / 3) sqrt(pi / 3) Z^2 alpha^3 c R_H, in 1/s. Throws ParameterError if Z < 1.
double hydrogenic_rate_constant(int z, const PhysicalConstants& constants);

// n^5 / (k ln n). Throws DomainError if n < 2.
double hydrogenic_lifetime(int n, int z, const PhysicalConstants& constants);

// Z^2 h c R_H (1/m^2 - 1/n^2). Throws ParameterError unless 1 <= m < n.
double transition_energy(int n, int m, int z, const PhysicalConstants& constants);

struct HydrogenicTransition {
  int n = 2;
  int m = 1;
  int z = 1;
  double lifetime_tau_n = 0.0;          // s
  double rate_constant_k = 0.0;         // 1/s
  double transition_energy_E_mn = 0.0;  // J
  double min_resolvable_energy = 0.0;   // (h/2) / tau_n, J
  bool observable = false;
  double margin = 0.0;  // E_mn / min_resolvable_energy
};

// Throws DomainError if n < 2, ParameterError for an invalid m or Z.
HydrogenicTransition observability(int n, int m, int z, const PhysicalConstants& constants);

}  // namespace conjugate
