#pragma once

#include <array>
#include <complex>

namespace bqed {

/// Worldline of the detector, always at distance z > 0 from the mirror
/// plane (natural units, c = 1).
struct Trajectory {
  enum class Kind { inertial, uniform_acceleration };

  Kind kind = Kind::inertial;
  double z = 1.0;  ///< distance from the plane
  double v = 0.0;  ///< drift speed parallel to the plane (inertial only)
  double a = 0.0;  ///< proper acceleration, directed away from the plane

  /// Inertial worldline at distance z, optionally drifting parallel to
  /// the plane with speed |v| < 1. Correlation functions along such a
  /// worldline are independent of v (boosts parallel to the plane are
  /// symmetries of both the plane and the vacuum), so v is stored for
  /// bookkeeping only.
  static Trajectory inertial(double z, double v = 0.0);

  /// Uniformly accelerated worldline with proper acceleration a > 0 at
  /// (instantaneous nearest) distance z from the plane.
  static Trajectory accelerated(double z, double a);
};

/// Which operator ordering the two-point function carries:
/// minus = positive-frequency ordering <E(tau) E(tau')>,
/// plus  = the reversed ordering <E(tau') E(tau)>.
enum class Branch { minus, plus };

using Mat3c = std::array<std::array<std::complex<double>, 3>, 3>;

/// Mirror-induced part of the electric-field two-point function along the
/// trajectory, evaluated at proper-time separation u = tau - tau' with
/// regulator eps > 0 (the branch decides the sign of the i*eps shift).
/// Only the x,y,z diagonal and the xz = zx corner are nonzero.
Mat3c wightman_boundary(const Trajectory& traj, Branch branch, double u,
                        double eps);

/// Free-space (no mirror) part of the same two-point function. Diagonal
/// and isotropic for both trajectory kinds.
Mat3c wightman_free(const Trajectory& traj, Branch branch, double u,
                    double eps);

/// Even combination (G_minus + G_plus) / 2 of the mirror-induced kernel.
Mat3c hadamard_boundary(const Trajectory& traj, double u, double eps);

/// Odd combination (G_minus - G_plus) / 2 of the mirror-induced kernel.
Mat3c pauli_jordan_boundary(const Trajectory& traj, double u, double eps);

}  // namespace bqed
