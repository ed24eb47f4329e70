#include "swe/model.hpp"

#include <cmath>
#include <stdexcept>

namespace swe {

ModelConfig build_config(double pump_ratio, std::vector<double> couplings) {
  if (!(pump_ratio >= 0.0) || pump_ratio >= 1.0 || !std::isfinite(pump_ratio))
    throw std::domain_error(
        "spin wave not bosonizable / invalid ratio: pump_ratio must lie in "
        "[0, 1)");
  if (couplings.empty())
    throw std::invalid_argument("couplings list must be nonempty");
  for (double k : couplings)
    if (!std::isfinite(k))
      throw std::invalid_argument("couplings must be finite");

  ModelConfig cfg;
  cfg.n_stokes = couplings.size();
  cfg.couplings = std::move(couplings);
  cfg.pump_ratio = pump_ratio;
  cfg.theta = std::atan(pump_ratio);
  const double r2 = pump_ratio * pump_ratio;
  cfg.boson_factor = (1.0 - r2) / (1.0 + r2);
  return cfg;
}

double coupling_from_physical(const PhysicalCoupling& p) {
  if (p.detuning == 0.0)
    throw std::domain_error("detuning must be nonzero (off-resonant mixing)");
  if (!(p.n_atoms > 0.0))
    throw std::domain_error("atom number must be positive");
  return p.g23 * p.omega_m * std::sqrt(p.n_atoms) / p.detuning;
}

bool adiabatic_warning(const PhysicalCoupling& p) {
  return std::abs(p.omega_m / p.detuning) > 0.1;
}

double seconds_per_unit_kt(double k_per_cm) {
  constexpr double c_cm_per_s = 2.99792458e10;
  return 1.0 / (k_per_cm * c_cm_per_s);
}

}  // namespace swe
