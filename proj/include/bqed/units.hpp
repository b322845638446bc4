#pragma once

#include <optional>
#include <string>

namespace bqed {

/// Laboratory-unit inputs (CGS): angular frequency in rad/s, distance in
/// cm, proper acceleration in cm/s^2. Any subset may be provided; the
/// derived quantities that need a missing input are left unset.
struct UnitContext {
  std::optional<double> omega_si;  ///< rad/s
  std::optional<double> z_si;      ///< cm
  std::optional<double> a_si;      ///< cm/s^2
};

/// Derived dimensionless combinations and the equivalent temperature.
struct NaturalQuantities {
  std::optional<double> sigma;          ///< omega z / c
  std::optional<double> eta;            ///< a z / c^2
  std::optional<double> accel_ratio;    ///< a / (c omega)
  std::optional<double> unruh_kelvin;   ///< hbar a / (2 pi c k_B)
};

/// Converts laboratory values to the dimensionless inputs of the rate
/// functions. Throws std::domain_error on nonpositive or non-finite
/// inputs.
NaturalQuantities to_natural(const UnitContext& ctx);

/// Human-readable multi-line report of everything derivable from `ctx`.
std::string format_units_report(const UnitContext& ctx);

}  // namespace bqed
