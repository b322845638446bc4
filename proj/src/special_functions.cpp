#include <bqed/special_functions.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace bqed {

namespace {

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) {
    throw std::domain_error(std::string(what) + " must be finite");
  }
}

// Exact rational Taylor coefficients of T0(eta) = alpha + 2 beta0 asinh(eta)/eta.
// Diagonal pairs: T0 = sum_k c[k] * eta^(2k+2); cross pair: sum_k c[k] * eta^(2k+3).
// Truncation at the default threshold eta = 1e-2 is far below 1e-30 relative.
constexpr double kT0xx[] = {
    16.0 / 3,           -256.0 / 15,         1152.0 / 35,
    -16384.0 / 315,     51200.0 / 693,       -98304.0 / 1001,
    802816.0 / 6435,    -16777216.0 / 109395, 42467328.0 / 230945,
    -209715200.0 / 969969, 507510784.0 / 2028117, -4831838208.0 / 16900975};
constexpr double kT0yy[] = {
    16.0 / 3,          -32.0 / 5,          256.0 / 35,
    -512.0 / 63,       2048.0 / 231,       -4096.0 / 429,
    65536.0 / 6435,    -131072.0 / 12155,  524288.0 / 46189,
    -1048576.0 / 88179, 8388608.0 / 676039, -16777216.0 / 1300075};
constexpr double kT0zz[] = {
    -16.0 / 3,        96.0 / 5,          -256.0 / 7,
    512.0 / 9,        -6144.0 / 77,      4096.0 / 39,
    -65536.0 / 495,   393216.0 / 2431,   -524288.0 / 2717,
    1048576.0 / 4641, -25165824.0 / 96577, 16777216.0 / 56525};
constexpr double kT0xz[] = {
    32.0 / 3,         -128.0 / 5,         1536.0 / 35,
    -4096.0 / 63,     20480.0 / 231,      -16384.0 / 143,
    917504.0 / 6435,  -2097152.0 / 12155, 9437184.0 / 46189,
    -20971520.0 / 88179, 184549376.0 / 676039};

template <std::size_t N>
double horner_in_eta2(const double (&c)[N], double eta2) {
  double acc = 0.0;
  for (std::size_t k = N; k-- > 0;) acc = acc * eta2 + c[k];
  return acc;
}

// Shared evaluator for every boundary function, given the reduced
// coefficients at the working eta. `t0` must be the stabilized
// alpha + 2 beta0 g combination and `g` = asinh(eta)/eta.
double eval_reduced(double alpha, double beta0, double beta2, double t0,
                    double g, double sigma, const EvalPolicy& policy) {
  const double s2 = sigma * sigma;
  if (sigma > policy.series_threshold_sigma) {
    const double X = 2.0 * sigma * g;
    return (alpha * std::cos(X)) / s2 +
           ((beta0 + s2 * beta2) / (s2 * sigma)) * std::sin(X);
  }
  // Small-sigma branch. Expanding cos X and sin X in X = 2 sigma g and
  // regrouping so that the cancelling k = 0 pair appears only through t0:
  //   f = t0/s^2 + 2 beta2 g
  //       + sum_{k>=1} (-4)^k g^{2k} [alpha/(2k)! + 2 beta0 g/(2k+1)!] s^{2k-2}
  //       + sum_{k>=1} (-4)^k g^{2k+1} 2 beta2 s^{2k} / (2k+1)!
  double f = t0 / s2 + 2.0 * beta2 * g;
  const double g2 = g * g;
  double pow4g = 1.0;     // (-4 g^2)^k
  double spow = 1.0;      // sigma^(2k-2)
  double fact = 1.0;      // (2k)!
  const int kmax = policy.series_order < 4 ? 2 : policy.series_order / 2;
  for (int k = 1; k <= kmax; ++k) {
    pow4g *= -4.0 * g2;
    fact *= (2.0 * k - 1.0) * (2.0 * k);        // -> (2k)!
    const double fact1 = fact * (2.0 * k + 1.0);  // (2k+1)!
    f += pow4g * (alpha / fact + 2.0 * beta0 * g / fact1) * spow;
    f += pow4g * g * 2.0 * beta2 * (spow * s2) / fact1;
    spow *= s2;
  }
  return f;
}

}  // namespace

const char* pair_name(Pair pair) {
  switch (pair) {
    case Pair::xx: return "xx";
    case Pair::yy: return "yy";
    case Pair::zz: return "zz";
    case Pair::xz: return "xz";
  }
  return "??";
}

Pair pair_from_name(std::string_view name) {
  if (name == "xx") return Pair::xx;
  if (name == "yy") return Pair::yy;
  if (name == "zz") return Pair::zz;
  if (name == "xz" || name == "zx") return Pair::xz;
  throw std::invalid_argument("unknown component pair: " + std::string(name));
}

double alpha_coef(Pair pair, double eta) {
  const double e2 = eta * eta;
  const double d = 1.0 + e2;
  switch (pair) {
    case Pair::xx: return 2.0 * (1.0 + 4.0 * e2) / (d * d);
    case Pair::yy: return 2.0 * (1.0 + 2.0 * e2) / d;
    case Pair::zz: return 2.0 * (2.0 + e2 + 2.0 * e2 * e2) / (d * d);
    case Pair::xz: return 2.0 * eta * (2.0 * e2 - 1.0) / (d * d);
  }
  return 0.0;
}

double beta0_coef(Pair pair, double eta) {
  const double e2 = eta * eta;
  const double d = 1.0 + e2;
  const double d52 = d * d * std::sqrt(d);
  switch (pair) {
    case Pair::xx: return -(1.0 + 2.0 * e2 + 4.0 * e2 * e2) / d52;
    case Pair::yy: return -1.0 / (d * std::sqrt(d));
    case Pair::zz: return -(2.0 + 5.0 * e2) / d52;
    case Pair::xz: return eta * (1.0 + 4.0 * e2) / d52;
  }
  return 0.0;
}

double beta2_coef(Pair pair, double eta) {
  const double e2 = eta * eta;
  const double d = 1.0 + e2;
  const double d32 = d * std::sqrt(d);
  switch (pair) {
    case Pair::xx: return 4.0 / d32;
    case Pair::yy: return 4.0 / std::sqrt(d);
    case Pair::zz: return 4.0 * e2 / d32;
    case Pair::xz: return 4.0 * eta / d32;
  }
  return 0.0;
}

double asinh_ratio(double eta, const EvalPolicy& policy) {
  require_finite(eta, "eta");
  if (eta < 0.0) throw std::domain_error("eta must be >= 0");
  if (eta >= policy.series_threshold_eta) return std::asinh(eta) / eta;
  // asinh(x)/x = sum_k c_k x^(2k), c_0 = 1,
  // c_{k+1}/c_k = -(2k+1)^2 / (2 (k+1) (2k+3)).
  const double e2 = eta * eta;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < 8; ++k) {
    term *= -e2 * (2.0 * k + 1.0) * (2.0 * k + 1.0) /
            (2.0 * (k + 1.0) * (2.0 * k + 3.0));
    sum += term;
    if (std::fabs(term) < 1e-18) break;
  }
  return sum;
}

double t0_combination(Pair pair, double eta, const EvalPolicy& policy) {
  require_finite(eta, "eta");
  if (eta < 0.0) throw std::domain_error("eta must be >= 0");
  if (eta > policy.series_threshold_eta) {
    return alpha_coef(pair, eta) +
           2.0 * beta0_coef(pair, eta) * asinh_ratio(eta, policy);
  }
  const double e2 = eta * eta;
  switch (pair) {
    case Pair::xx: return e2 * horner_in_eta2(kT0xx, e2);
    case Pair::yy: return e2 * horner_in_eta2(kT0yy, e2);
    case Pair::zz: return e2 * horner_in_eta2(kT0zz, e2);
    case Pair::xz: return e2 * eta * horner_in_eta2(kT0xz, e2);
  }
  return 0.0;
}

double f_x(double sigma, const EvalPolicy& policy) {
  require_finite(sigma, "sigma");
  if (sigma <= 0.0) throw std::domain_error("sigma must be > 0");
  return eval_reduced(2.0, -1.0, 4.0, /*t0=*/0.0, /*g=*/1.0, sigma, policy);
}

double f_z(double sigma, const EvalPolicy& policy) {
  require_finite(sigma, "sigma");
  if (sigma <= 0.0) throw std::domain_error("sigma must be > 0");
  return eval_reduced(4.0, -2.0, 0.0, /*t0=*/0.0, /*g=*/1.0, sigma, policy);
}

double f_accel(Pair pair, double sigma, double eta, const EvalPolicy& policy) {
  require_finite(sigma, "sigma");
  require_finite(eta, "eta");
  if (sigma <= 0.0) throw std::domain_error("sigma must be > 0");
  if (eta < 0.0) throw std::domain_error("eta must be >= 0");
  if (eta == 0.0) {
    // Exact delegation to the inertial functions.
    switch (pair) {
      case Pair::xx:
      case Pair::yy: return f_x(sigma, policy);
      case Pair::zz: return f_z(sigma, policy);
      case Pair::xz: return 0.0;
    }
  }
  return eval_reduced(alpha_coef(pair, eta), beta0_coef(pair, eta),
                      beta2_coef(pair, eta), t0_combination(pair, eta, policy),
                      asinh_ratio(eta, policy), sigma, policy);
}

double planck_n(double omega, double accel) {
  require_finite(omega, "omega");
  require_finite(accel, "accel");
  if (omega <= 0.0) throw std::domain_error("omega must be > 0");
  if (accel < 0.0) throw std::domain_error("accel must be >= 0");
  if (accel == 0.0) return 0.0;
  const double x = 2.0 * std::numbers::pi * omega / accel;
  if (x > 700.0) return 0.0;  // below the double underflow cliff
  return 1.0 / std::expm1(x);
}

double small_a_correction(Pair pair, double sigma, double omega_scale) {
  require_finite(sigma, "sigma");
  require_finite(omega_scale, "omega_scale");
  if (sigma <= 0.0) throw std::domain_error("sigma must be > 0");
  if (omega_scale <= 0.0) throw std::domain_error("omega_scale must be > 0");
  const double s = sigma;
  const double c = std::cos(2.0 * s);
  const double sn = std::sin(2.0 * s);
  const double w2 = omega_scale * omega_scale;
  switch (pair) {
    case Pair::xx:
      return ((13.0 - 4.0 * s * s) / 3.0 * c +
              (3.0 - 32.0 * s * s) / (6.0 * s) * sn) / w2;
    case Pair::yy:
      return ((7.0 - 4.0 * s * s) / 3.0 * c +
              (9.0 - 8.0 * s * s) / (6.0 * s) * sn) / w2;
    case Pair::zz:
      return (-16.0 / 3.0 * c + 16.0 * s / 3.0 * sn) / w2;
    case Pair::xz:
      return (-(2.0 / s) * c + (4.0 * s * s + 1.0) / (s * s) * sn) /
             omega_scale;
  }
  return 0.0;
}

double envelope_bound(Pair pair, double sigma, double eta) {
  require_finite(sigma, "sigma");
  if (sigma <= 0.0) throw std::domain_error("sigma must be > 0");
  const double s2 = sigma * sigma;
  return std::fabs(alpha_coef(pair, eta)) / s2 +
         std::fabs(beta0_coef(pair, eta)) / (s2 * sigma) +
         std::fabs(beta2_coef(pair, eta)) / sigma;
}

}  // namespace bqed
