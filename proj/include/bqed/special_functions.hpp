#pragma once
// Oscillatory boundary-modulation functions and thermal factors.
//
// Everything here lives on the reduced, dimensionless variables
//     sigma = omega * z   and   eta = a * z
// (transition frequency omega, distance z from the conducting plane, proper
// acceleration a, natural units). The four boundary functions share one
// algebraic shape,
//     f = alpha(eta)/sigma^2 * cos X + (beta0(eta) + sigma^2 beta2(eta))/sigma^3 * sin X,
//     X = 2 sigma * asinh(eta)/eta,
// whose closed form loses ~10 digits to cancellation below sigma ~ 1e-2. A
// Taylor-series branch takes over there; the only cancellation-prone scalar,
// T0(eta) = alpha + 2 beta0 asinh(eta)/eta, gets its own series in eta.

#include <string_view>

namespace bqed {

// Polarization component pair of the boundary correlator: the diagonal pairs
// plus the single cross pair xz (= zx) coupling the direction of motion (x)
// to the plane normal (z).
enum class Pair { xx, yy, zz, xz };

const char* pair_name(Pair pair);
// Accepts "xx", "yy", "zz", "xz" and the alias "zx" (the correlator is
// symmetric); throws std::invalid_argument for anything else.
Pair pair_from_name(std::string_view name);

// Series/closed-form switchover policy. Defaults keep the truncation error
// of the small-argument branches below ~1e-14 at the thresholds.
struct EvalPolicy {
  double series_threshold_sigma = 1e-2;  // closed form above, series at/below
  double series_threshold_eta = 1e-2;    // same idea for eta-dependent pieces
  int series_order = 8;                  // highest sigma power kept in series
};

// Inertial boundary functions (eta = 0 specializations):
//   f_x = (2 cos 2s)/s^2 + ((4s^2 - 1) sin 2s)/s^3     (x and y dipoles)
//   f_z = (4 cos 2s)/s^2 - (2 sin 2s)/s^3              (z dipoles)
// Limits: f_x -> 16/3 and f_z -> -16/3 as sigma -> 0+; both -> 0 at infinity.
double f_x(double sigma, const EvalPolicy& policy = {});
double f_z(double sigma, const EvalPolicy& policy = {});
inline double f_y(double sigma, const EvalPolicy& policy = {}) {
  return f_x(sigma, policy);  // the y function equals the x function exactly
}

// Accelerated boundary function for one component pair. eta = 0 reduces
// exactly to the inertial functions (xx,yy -> f_x; zz -> f_z; xz -> 0).
double f_accel(Pair pair, double sigma, double eta,
               const EvalPolicy& policy = {});

// Planck occupation at the acceleration temperature a/2pi:
//   n = 1 / (exp(2 pi omega / a) - 1),
// exactly 0 for a = 0 and underflow-safe for 2 pi omega / a > 700.
// Throws std::domain_error for omega <= 0 or a < 0.
double planck_n(double omega, double accel);

// Leading acceleration correction to f at fixed (z, omega): the coefficient
// of a^2 for the diagonal pairs and of a^1 for xz, as a function of
// sigma = omega*z and the frequency scale omega (which carries the units):
//   xx: [ (13 - 4s^2)/3 cos 2s + (3 - 32 s^2)/(6s) sin 2s ] / omega^2
//   yy: [ (7 - 4s^2)/3 cos 2s + (9 - 8 s^2)/(6s) sin 2s ] / omega^2
//   zz: [ -16/3 cos 2s + (16 s/3) sin 2s ] / omega^2
//   xz: [ -(2/s) cos 2s + ((4 s^2 + 1)/s^2) sin 2s ] / omega
double small_a_correction(Pair pair, double sigma, double omega_scale);

// Rigorous triangle-inequality envelope:
//   |f(sigma,eta)| <= |alpha|/s^2 + |beta0|/s^3 + |beta2|/s.
// Along rays eta/sigma = r > 0 it decays like 1/sigma^2; the inertial x
// function (r = 0) genuinely decays only like 1/sigma.
double envelope_bound(Pair pair, double sigma, double eta);

// Reduced-decomposition ingredients, exposed for tests and the oracle.
double alpha_coef(Pair pair, double eta);
double beta0_coef(Pair pair, double eta);
double beta2_coef(Pair pair, double eta);
// asinh(eta)/eta with a series branch below the eta threshold; 1 at eta = 0.
double asinh_ratio(double eta, const EvalPolicy& policy = {});
// T0(eta) = alpha + 2 beta0 asinh(eta)/eta, series-stabilized near eta = 0
// where the closed form cancels to O(eta^2).
double t0_combination(Pair pair, double eta, const EvalPolicy& policy = {});

}  // namespace bqed
