#pragma once

#include <bqed/oracle.hpp>

#include <string>
#include <vector>

namespace bqed {

/// Which verification grid to run.
enum class VerifyPreset {
  defaults,  ///< full grid: sigma in {0.3, 1, 3} x r in {0, 0.2, 1},
             ///< all pairs, both mechanisms, plus series-probe rows
  smoke,     ///< single point (sigma = 1, r = 0.2), quick
};

VerifyPreset verify_preset_from_name(const std::string& name);

/// Outcome of a verification run.
struct VerifySummary {
  std::vector<OracleReport> reports;
  bool all_pass = false;
  double seconds = 0.0;
};

/// Runs the closed-form-vs-quadrature grid on a canonical two-level
/// system, then the small-acceleration and small-distance series probes.
/// Probe rows include deliberate checks that the published variants of
/// two expansion coefficients disagree with the function they expand;
/// those rows pass when the discrepancy is detected.
VerifySummary run_verify_grid(VerifyPreset preset, double pass_rel_tol = 1e-3,
                              const QuadratureConfig& cfg = {});

/// Fixed-width table of the reports; one row per OracleReport.
std::string format_verify_table(const VerifySummary& summary);

}  // namespace bqed
