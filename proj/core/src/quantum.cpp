#include "conjugate/quantum.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "conjugate/errors.hpp"
#include "conjugate/fourier.hpp"

namespace conjugate {

namespace {

constexpr double kPi = std::numbers::pi;

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw ParameterError(std::string(name) + " must be positive and finite");
  }
}

bool meets(double product, double bound) { return product >= bound * (1.0 - kSatisfactionRelTol); }

}  // namespace

void validate(const PhysicalConstants& constants) {
  require_positive(constants.planck_h, "planck_h");
  require_positive(constants.hbar, "hbar");
  require_positive(constants.fine_structure_alpha, "fine_structure_alpha");
  require_positive(constants.light_speed_c, "light_speed_c");
  require_positive(constants.rydberg_R_H, "rydberg_R_H");
  const double expected = constants.planck_h / (2.0 * kPi);
  if (std::abs(constants.hbar - expected) > 1e-12 * expected) {
    throw ParameterError("hbar must equal planck_h / (2 pi) to 1e-12 relative");
  }
}

double momentum_from_wavenumber(double wavenumber, const PhysicalConstants& constants) noexcept {
  return constants.hbar * wavenumber;
}

double momentum_from_wavelength(double wavelength, const PhysicalConstants& constants) {
  require_positive(wavelength, "wavelength");
  return constants.planck_h / wavelength;
}

std::string_view to_string(PairKind kind) noexcept {
  return kind == PairKind::position_momentum ? "position_momentum" : "time_energy";
}

PairKind parse_pair_kind(std::string_view text) {
  if (text == "position_momentum") return PairKind::position_momentum;
  if (text == "time_energy") return PairKind::time_energy;
  throw ParameterError("unknown pair kind '" + std::string(text) + "'");
}

ConjugatePair uncertainty_in_units(const SampledSignal& signal, PairKind kind, const PhysicalConstants& constants,
                                   BoundChoice bound_choice) {
  validate(constants);
  const UncertaintyReport widths = uncertainty_product(signal, Convention::nu);

  ConjugatePair pair;
  pair.kind = kind;
  pair.width_a = widths.signal_report.effective_width;
  pair.width_b = constants.planck_h * widths.transform_report.effective_width;
  pair.product = pair.width_a * pair.width_b;
  pair.bound_h_over_2 = 0.5 * constants.planck_h;
  pair.bound_hbar_over_2 = 0.5 * constants.hbar;
  pair.satisfied_h_over_2 = meets(pair.product, pair.bound_h_over_2);
  pair.satisfied_hbar_over_2 = meets(pair.product, pair.bound_hbar_over_2);
  pair.bound_choice = bound_choice;
  if (bound_choice == BoundChoice::h_over_2) {
    pair.bound = pair.bound_h_over_2;
    pair.satisfied = pair.satisfied_h_over_2;
  } else {
    pair.bound = pair.bound_hbar_over_2;
    pair.satisfied = pair.satisfied_hbar_over_2;
  }
  pair.width_reliable = widths.width_reliable;
  return pair;
}

PhysicalLimits physical_limits(const SamplingScenario& scenario, const PhysicalConstants& constants) {
  validate(constants);
  PhysicalLimits limits;
  limits.position_sample_interval = scenario.sample_interval;
  limits.nyquist_wavenumber = nyquist_wavenumber(scenario);
  limits.nyquist_momentum = constants.planck_h * scenario.nyquist_conjugate_limit;
  if (scenario.truncation_limit) {
    limits.truncation_limit = scenario.truncation_limit;
    limits.wavenumber_sample_interval = kPi / *scenario.truncation_limit;
    limits.momentum_sample_interval = constants.planck_h * *scenario.conjugate_sample_interval;
  }
  return limits;
}

BrillouinZone::BrillouinZone(double lattice_spacing) : spacing_(lattice_spacing), boundary_(0.0) {
  require_positive(lattice_spacing, "lattice spacing");
  boundary_ = kPi / lattice_spacing;
}

ReducedWavenumber brillouin_reduce(double wavenumber, const BrillouinZone& zone) {
  const double half = zone.boundary();
  if (wavenumber > -half && wavenumber <= half) {
    return {wavenumber, 0};
  }
  const double g = zone.reciprocal_vector();
  auto index = static_cast<long long>(std::ceil(wavenumber / g - 0.5));
  double reduced = wavenumber - static_cast<double>(index) * g;
  // Rounding in the quotient can land one zone off near a boundary.
  if (reduced > half) {
    reduced -= g;
    ++index;
  } else if (reduced <= -half) {
    reduced += g;
    --index;
  }
  return {reduced, index};
}

bool lattice_alias_check(double k1, double k2, const BrillouinZone& zone, std::size_t n_sites) {
  if (n_sites < 2) {
    throw ParameterError("lattice alias check needs at least 2 sites");
  }
  for (std::size_t j = 0; j < n_sites; ++j) {
    const double x = static_cast<double>(j) * zone.lattice_spacing();
    if (std::abs(std::polar(1.0, k1 * x) - std::polar(1.0, k2 * x)) > kLatticeAliasTolerance) {
      return false;
    }
  }
  return true;
}

double hydrogenic_rate_constant(int z, const PhysicalConstants& constants) {
  if (z < 1) {
    throw ParameterError("nuclear charge Z must be at least 1");
  }
  const double prefactor = (64.0 / 3.0) * std::sqrt(kPi / 3.0);
  const double zz = static_cast<double>(z) * static_cast<double>(z);
  const double a = constants.fine_structure_alpha;
  return prefactor * zz * (a * a * a) * constants.light_speed_c * constants.rydberg_R_H;
}

double hydrogenic_lifetime(int n, int z, const PhysicalConstants& constants) {
  if (n < 2) {
    throw DomainError("lifetime n^5 / ln(n) is singular for n < 2 (got n = " + std::to_string(n) + ")");
  }
  const double dn = static_cast<double>(n);
  return std::pow(dn, 5) / (hydrogenic_rate_constant(z, constants) * std::log(dn));
}

double transition_energy(int n, int m, int z, const PhysicalConstants& constants) {
  if (m < 1 || m >= n) {
    throw ParameterError("transition needs 1 <= m < n (got n = " + std::to_string(n) + ", m = " +
                         std::to_string(m) + ")");
  }
  if (z < 1) {
    throw ParameterError("nuclear charge Z must be at least 1");
  }
  const double dn = static_cast<double>(n);
  const double dm = static_cast<double>(m);
  const double zz = static_cast<double>(z) * static_cast<double>(z);
  return zz * constants.planck_h * constants.light_speed_c * constants.rydberg_R_H *
         (1.0 / (dm * dm) - 1.0 / (dn * dn));
}

HydrogenicTransition observability(int n, int m, int z, const PhysicalConstants& constants) {
  if (n < 2) {
    throw DomainError("observability needs n >= 2 (got n = " + std::to_string(n) + ")");
  }
  HydrogenicTransition t;
  t.n = n;
  t.m = m;
  t.z = z;
  t.transition_energy_E_mn = transition_energy(n, m, z, constants);
  t.rate_constant_k = hydrogenic_rate_constant(z, constants);
  t.lifetime_tau_n = hydrogenic_lifetime(n, z, constants);
  t.min_resolvable_energy = 0.5 * constants.planck_h / t.lifetime_tau_n;
  t.observable = t.transition_energy_E_mn >= t.min_resolvable_energy;
  t.margin = t.transition_energy_E_mn / t.min_resolvable_energy;
  return t;
}

}  // namespace conjugate
