#pragma once

#include <cstddef>
#include <vector>

namespace swe {

// Physical configuration of one spin mode coupled to N Stokes modes.
//
// The pump ratio r = Omega_p / Omega_c fixes the mixing angle theta =
// arctan(r) and the boson factor a = cos^2(theta) - sin^2(theta)
// = (1 - r^2) / (1 + r^2), the effective spin commutator [S, S+] = a.
// Couplings k_n are dimensionless; time is reported in units of 1/k_1.
// theta and boson_factor are derived from pump_ratio, never set directly.
struct ModelConfig {
  std::size_t n_stokes = 0;
  std::vector<double> couplings;
  double pump_ratio = 0.0;
  double theta = 0.0;
  double boson_factor = 1.0;

  double cos2_theta() const { return 1.0 / (1.0 + pump_ratio * pump_ratio); }
  double sin2_theta() const {
    return pump_ratio * pump_ratio / (1.0 + pump_ratio * pump_ratio);
  }
};

// Raw experimental parameters behind one dimensionless coupling.
struct PhysicalCoupling {
  double g23 = 0.0;      // field-atom coupling coefficient
  double omega_m = 0.0;  // mixing-field Rabi frequency
  double n_atoms = 0.0;  // atoms in the interaction volume
  double detuning = 0.0; // omega_m - omega_31, nonzero
};

// Throws std::domain_error when pump_ratio is outside [0, 1) (the spin wave
// stops being bosonizable at r = 1) and std::invalid_argument for an empty or
// non-finite coupling list.
ModelConfig build_config(double pump_ratio, std::vector<double> couplings);

// k = g23 * omega_m * sqrt(N_a) / detuning. Sign follows detuning and
// omega_m. Throws std::domain_error when detuning == 0 or n_atoms <= 0.
double coupling_from_physical(const PhysicalCoupling& p);

// Soft validity condition for the adiabatic elimination behind
// coupling_from_physical: |omega_m / detuning| should stay small.
bool adiabatic_warning(const PhysicalCoupling& p);

// Informational unit conversion: a coupling quoted as a spatial rate in
// 1/cm reaches k*t = 1 after t = 1 / (k * c) seconds of light travel.
double seconds_per_unit_kt(double k_per_cm);

}  // namespace swe
