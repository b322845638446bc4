#include <bqed/units.hpp>
#include <bqed/constants.hpp>

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace bqed {

namespace {

void check_positive(const std::optional<double>& v, const char* name) {
  if (v && (!std::isfinite(*v) || *v <= 0.0)) {
    throw std::domain_error(std::string(name) + " must be finite and > 0");
  }
}

}  // namespace

NaturalQuantities to_natural(const UnitContext& ctx) {
  check_positive(ctx.omega_si, "omega");
  check_positive(ctx.z_si, "z");
  check_positive(ctx.a_si, "a");
  NaturalQuantities q;
  const double c = kSpeedOfLightCgs;
  if (ctx.omega_si && ctx.z_si) {
    q.sigma = (*ctx.omega_si) * (*ctx.z_si) / c;
  }
  if (ctx.a_si && ctx.z_si) {
    q.eta = (*ctx.a_si) * (*ctx.z_si) / (c * c);
  }
  if (ctx.a_si && ctx.omega_si) {
    q.accel_ratio = (*ctx.a_si) / (c * (*ctx.omega_si));
  }
  if (ctx.a_si) {
    q.unruh_kelvin = kHbarCgs * (*ctx.a_si) /
                     (2.0 * std::numbers::pi * c * kBoltzmannCgs);
  }
  return q;
}

std::string format_units_report(const UnitContext& ctx) {
  const NaturalQuantities q = to_natural(ctx);
  std::ostringstream out;
  out.precision(9);
  if (ctx.omega_si) out << "omega              = " << *ctx.omega_si << " rad/s\n";
  if (ctx.z_si) out << "z                  = " << *ctx.z_si << " cm\n";
  if (ctx.a_si) out << "a                  = " << *ctx.a_si << " cm/s^2\n";
  if (q.sigma) out << "sigma = omega z/c  = " << *q.sigma << "\n";
  if (q.eta) out << "eta = a z/c^2      = " << *q.eta << "\n";
  if (q.accel_ratio) out << "a/(c omega)        = " << *q.accel_ratio << "\n";
  if (q.unruh_kelvin) {
    out << "Unruh temperature  = " << *q.unruh_kelvin << " K\n";
  }
  if (out.str().empty()) out << "no inputs given\n";
  return out.str();
}

}  // namespace bqed
