#pragma once

#include <bqed/atom.hpp>
#include <bqed/field_correlations.hpp>
#include <bqed/special_functions.hpp>

#include <functional>
#include <string>
#include <vector>

namespace bqed {

/// Controls for the independent numerical cross-check.
struct QuadratureConfig {
  /// Regulator ladder; each entry is eps * |omega| (dimensionless), so the
  /// actual regulator adapts to the transition frequency. The transform is
  /// evaluated on the ladder and extrapolated to eps -> 0 with a quadratic
  /// Lagrange polynomial in eps.
  std::vector<double> eps_ladder{0.02, 0.01, 0.005};
  /// Half-line truncation length; 0 selects an automatic choice from the
  /// decay scale of the kernel.
  double half_range_L = 0.0;
  /// Termination targets for the adaptive panels (per regulator value).
  double abs_tol = 1e-10;
  double rel_tol = 1e-6;
  /// Cap on adaptive panel splits per integral.
  int max_subdivisions = 4000;
};

/// Which kernel the transform is taken of.
enum class KernelKind {
  hadamard,                    ///< even mirror part, cosine transform
  pauli_jordan,                ///< odd mirror part, sine transform
  wightman_free_hadamard,      ///< even free part
  wightman_free_pauli_jordan,  ///< odd free part
};

/// One extrapolated Fourier-transform value with its error estimate and
/// the raw ladder used to produce it.
struct FourierValue {
  double value = 0.0;
  double error = 0.0;
  std::vector<std::pair<double, double>> ladder;  ///< (eps, value at eps)
};

/// Frequency transform of the chosen kernel component along the
/// trajectory:
///   integral du e^{i omega u} K_pair(u)
/// computed as a regulated half-line integral, adaptively (Gauss-Kronrod
/// 7-15 panels), then extrapolated in the regulator. `omega` may be of
/// either sign for the free Wightman kernel; for the even/odd mirror
/// combinations the result is an even/odd function of omega and is
/// evaluated at |omega| internally.
FourierValue fourier_kernel(KernelKind kind, Pair pair,
                            const Trajectory& traj, double omega,
                            const QuadratureConfig& cfg = {});

/// One closed-form-vs-quadrature comparison row.
struct OracleReport {
  std::string quantity_id;
  double closed_form_value = 0.0;
  double oracle_value = 0.0;
  double abs_error_estimate = 0.0;
  std::vector<std::pair<double, double>> extrapolation_curve;
  bool pass = false;
};

/// Cross-checks every rate entry produced by the closed forms for level `b`
/// of `spec` on `traj` against the quadrature oracle. A row passes when
/// |closed - oracle| <= max(cfg.abs_tol, pass_rel_tol * |closed|).
/// Entries whose polarization weight vanishes identically are reported as
/// exact zeros without running quadrature.
std::vector<OracleReport> verify_rate(const AtomSpec& spec,
                                      const std::string& b,
                                      const Trajectory& traj,
                                      const QuadratureConfig& cfg = {},
                                      double pass_rel_tol = 1e-3,
                                      double e2 = 1.0);

/// One extracted Taylor coefficient with a spread-based error bar.
struct SeriesCoefficient {
  double value = 0.0;
  double error = 0.0;
};

/// How series_probe samples the function.
enum class ProbeDirection {
  forward,  ///< one-sided, h > 0 only (for functions defined on h >= 0)
  central,  ///< symmetric, uses even/odd splitting
};

/// Numerically extracts Taylor coefficients c_0 .. c_order of `fn` about 0
/// from samples at h0, h0/2, h0/4, ... using Richardson (Neville ratio-2)
/// tables, peeling coefficients sequentially. `fn` must be smooth at 0.
std::vector<SeriesCoefficient> series_probe(
    const std::function<double(double)>& fn, int order,
    ProbeDirection direction = ProbeDirection::central, double h0 = 0.5);

}  // namespace bqed
