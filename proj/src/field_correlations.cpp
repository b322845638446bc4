#include <bqed/field_correlations.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bqed {

namespace {

constexpr double kPi2 = std::numbers::pi * std::numbers::pi;

void require(bool ok, const char* msg) {
  if (!ok) throw std::domain_error(msg);
}

std::complex<double> regulated(double u, Branch branch, double eps) {
  // The regulator shifts only the time separation appearing in the
  // denominators; numerators stay at the real separation.
  return {u, branch == Branch::minus ? -eps : eps};
}

}  // namespace

Trajectory Trajectory::inertial(double z, double v) {
  require(std::isfinite(z) && z > 0.0, "distance z must be finite and > 0");
  require(std::isfinite(v) && std::fabs(v) < 1.0, "drift speed must satisfy |v| < 1");
  Trajectory t;
  t.kind = Kind::inertial;
  t.z = z;
  t.v = v;
  return t;
}

Trajectory Trajectory::accelerated(double z, double a) {
  require(std::isfinite(z) && z > 0.0, "distance z must be finite and > 0");
  require(std::isfinite(a) && a > 0.0, "acceleration must be finite and > 0");
  Trajectory t;
  t.kind = Kind::uniform_acceleration;
  t.z = z;
  t.a = a;
  return t;
}

Mat3c wightman_boundary(const Trajectory& traj, Branch branch, double u,
                        double eps) {
  require(std::isfinite(u), "separation u must be finite");
  require(std::isfinite(eps) && eps > 0.0, "regulator eps must be > 0");
  Mat3c G{};
  const double z = traj.z;
  const std::complex<double> ue = regulated(u, branch, eps);
  if (traj.kind == Trajectory::Kind::inertial) {
    const std::complex<double> d = ue * ue - 4.0 * z * z;
    const std::complex<double> d2 = d * d;
    const std::complex<double> gxx = -(u * u + 4.0 * z * z) / (kPi2 * d2 * d);
    G[0][0] = gxx;
    G[1][1] = gxx;
    G[2][2] = 1.0 / (kPi2 * d2);
    return G;
  }
  const double a = traj.a;
  const double az = a * z;
  const double sh = std::sinh(a * u / 2.0);
  const double ch = std::cosh(a * u / 2.0);
  const double sh2 = sh * sh;
  const double chsh = ch * ch + sh * sh;
  const std::complex<double> se = std::sinh(a * ue / 2.0);
  const std::complex<double> S = se * se - az * az;
  const std::complex<double> pref =
      -(a * a * a * a) / (16.0 * kPi2 * S * S * S);
  G[0][0] = pref * (sh2 + az * az);
  G[1][1] = pref * (sh2 + az * az * chsh);
  G[2][2] = pref * (-sh2 + az * az * chsh);
  G[0][2] = pref * (2.0 * az * sh2);
  G[2][0] = G[0][2];
  return G;
}

Mat3c wightman_free(const Trajectory& traj, Branch branch, double u,
                    double eps) {
  require(std::isfinite(u), "separation u must be finite");
  require(std::isfinite(eps) && eps > 0.0, "regulator eps must be > 0");
  Mat3c G{};
  const std::complex<double> ue = regulated(u, branch, eps);
  std::complex<double> diag;
  if (traj.kind == Trajectory::Kind::inertial) {
    const std::complex<double> ue2 = ue * ue;
    diag = 1.0 / (kPi2 * ue2 * ue2);
  } else {
    const double a = traj.a;
    const std::complex<double> se = std::sinh(a * ue / 2.0);
    const std::complex<double> se2 = se * se;
    diag = (a * a * a * a) / (16.0 * kPi2 * se2 * se2);
  }
  G[0][0] = diag;
  G[1][1] = diag;
  G[2][2] = diag;
  return G;
}

Mat3c hadamard_boundary(const Trajectory& traj, double u, double eps) {
  const Mat3c gm = wightman_boundary(traj, Branch::minus, u, eps);
  const Mat3c gp = wightman_boundary(traj, Branch::plus, u, eps);
  Mat3c out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i][j] = 0.5 * (gm[i][j] + gp[i][j]);
  return out;
}

Mat3c pauli_jordan_boundary(const Trajectory& traj, double u, double eps) {
  const Mat3c gm = wightman_boundary(traj, Branch::minus, u, eps);
  const Mat3c gp = wightman_boundary(traj, Branch::plus, u, eps);
  Mat3c out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i][j] = 0.5 * (gm[i][j] - gp[i][j]);
  return out;
}

}  // namespace bqed
