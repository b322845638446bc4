#pragma once
// Physical constants. The library works in natural units (hbar = c = 1,
// Lorentz-Heaviside); lengths set the scale, so energies, frequencies and
// proper accelerations are all inverse lengths and rates come out as
// (inverse length)^2. CGS values appear only in the unit-conversion helpers.
#include <numbers>

namespace bqed {

// Electromagnetic coupling e^2 (Lorentz-Heaviside: e^2 = 4*pi*alpha).
inline constexpr double kDefaultCoupling = 4.0 * std::numbers::pi / 137.035999;

// CGS constants for the `units` command.
inline constexpr double kSpeedOfLightCgs = 2.99792458e10;  // cm / s
inline constexpr double kHbarCgs = 1.054571817e-27;        // erg s
inline constexpr double kBoltzmannCgs = 1.380649e-16;      // erg / K

}  // namespace bqed
