#pragma once

#include <bqed/atom.hpp>
#include <bqed/special_functions.hpp>

#include <string>

namespace bqed {

/// A one-dimensional parameter sweep producing a CSV table of rate
/// contributions. Exactly one of z / a / omega varies; the others are
/// held at the fixed values below.
struct SweepPlan {
  enum class Variable { z, a, omega };

  Variable variable = Variable::z;
  double from = 0.0;
  double to = 0.0;
  int points = 2;
  bool log_spacing = false;

  double fixed_z = 1.0;
  double fixed_a = 0.0;          ///< 0 selects the inertial trajectory
  double omega_scale = 1.0;      ///< multiplies every level energy
  double e2 = 1.0;
  int threads = 1;               ///< worker threads; output is
                                 ///< byte-identical for any count
};

/// Runs the sweep for level `b` of `spec` and returns the CSV text,
/// header included:
///   variable,omega_bd,pair,mechanism,part,channel,rate
/// Rows per grid point and transition, in pair order xx,yy,zz,xz:
/// boundary vf, boundary rr, boundary total, and (diagonal pairs only)
/// the unbounded total. Values are printed with %.17g so the table
/// round-trips doubles exactly.
std::string run_sweep(const AtomSpec& spec, const std::string& b,
                      const SweepPlan& plan, const EvalPolicy& policy = {});

}  // namespace bqed
