// Acceptance gate for the boundary-QED rate library.
//
// Runs ten end-to-end checks covering exact stability of inertial ground
// states, oracle agreement, asymptotic limits, detailed balance, series
// coefficients, crossing detection, scaling invariance, and deterministic
// parallel sweeps. Prints one [PASS]/[FAIL] line per criterion and returns
// the number of failures.

#include <bqed/atom.hpp>
#include <bqed/field_correlations.hpp>
#include <bqed/oracle.hpp>
#include <bqed/rates.hpp>
#include <bqed/special_functions.hpp>
#include <bqed/sweep.hpp>
#include <bqed/verify.hpp>

#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

namespace {

using namespace bqed;

constexpr double kPi = std::numbers::pi;

int g_failures = 0;

void report(int num, bool pass, const char* fmt, ...) {
  if (!pass) ++g_failures;
  std::printf("[%s] criterion %d: ", pass ? "PASS" : "FAIL", num);
  va_list args;
  va_start(args, fmt);
  std::vprintf(fmt, args);
  va_end(args);
  std::printf("\n");
}

void note(const char* fmt, ...) {
  std::printf("       ! ");
  va_list args;
  va_start(args, fmt);
  std::vprintf(fmt, args);
  va_end(args);
  std::printf("\n");
}

AtomSpec iso_two_level() {
  AtomSpec spec;
  spec.name = "isotropic two-level";
  spec.levels = {{"g", 0.0}, {"e", 1.0}};
  DipoleElement d;
  d.from = "e";
  d.to = "g";
  const double c = 1.0 / std::sqrt(3.0);
  d.vector = {c, c, c};
  spec.dipoles = {d};
  spec.initial_state = "e";
  return spec;
}

AtomSpec z_two_level() {
  AtomSpec spec;
  spec.name = "z-polarized two-level";
  spec.levels = {{"g", 0.0}, {"e", 1.0}};
  DipoleElement d;
  d.from = "e";
  d.to = "g";
  d.vector = {0.0, 0.0, 1.0};
  spec.dipoles = {d};
  spec.initial_state = "e";
  return spec;
}

bool close_rel(double a, double b, double rel, double abs_floor = 0.0) {
  return std::fabs(a - b) <=
         std::max(rel * std::max(std::fabs(a), std::fabs(b)), abs_floor);
}

// ---------------------------------------------------------------------------
// 1. Randomized inertial ground states: grand total identically zero,
//    vacuum-fluctuation and radiation-reaction boundary entries cancel
//    pairwise, free-space entries vanish.
bool criterion1() {
  std::mt19937 rng(20260819u);
  std::uniform_real_distribution<double> gap(0.2, 3.0);
  std::uniform_real_distribution<double> comp(-1.0, 1.0);
  std::uniform_int_distribution<int> nlev(2, 5);

  bool ok = true;
  for (int trial = 0; trial < 10; ++trial) {
    AtomSpec spec;
    spec.name = "randomized";
    const int n = nlev(rng);
    double energy = 0.0;
    for (int i = 0; i < n; ++i) {
      spec.levels.push_back({"L" + std::to_string(i), energy});
      energy += gap(rng);
    }
    spec.initial_state = "L0";
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        DipoleElement d;
        d.from = "L" + std::to_string(j);
        d.to = "L" + std::to_string(i);
        for (int k = 0; k < 3; ++k) d.vector[k] = {comp(rng), comp(rng)};
        spec.dipoles.push_back(d);
      }
    }
    if (!validate(spec).empty()) {
      note("trial %d produced an invalid spec", trial);
      ok = false;
      continue;
    }

    // z chosen so sigma = omega * z spans 1e-3 .. 1e3 across the trials.
    const double z = std::pow(10.0, -3.0 + 6.0 * trial / 9.0);
    const double e2 = 0.5 + 0.37 * trial;
    const RateBreakdown bd = rate_inertial(spec, "L0", z, e2);

    double scale = 0.0;
    for (const auto& en : bd.entries) scale += std::fabs(en.rate);
    const double total = bd.total();
    if (!(std::fabs(total) <= 1e-14 * std::max(scale, 1e-300))) {
      note("trial %d: |total| = %.3e exceeds 1e-14 * %.3e", trial,
           std::fabs(total), scale);
      ok = false;
    }
    for (std::size_t k = 0; k < bd.entries.size(); ++k) {
      const RateEntry& en = bd.entries[k];
      if (en.channel != Channel::excitation) {
        note("trial %d: ground state produced a non-excitation entry", trial);
        ok = false;
      }
      if (en.part == Part::unbounded && en.rate != 0.0) {
        note("trial %d: nonzero free-space entry %.3e", trial, en.rate);
        ok = false;
      }
      if (en.part == Part::boundary && en.mechanism == Mechanism::vf) {
        if (k + 1 >= bd.entries.size() ||
            bd.entries[k + 1].mechanism != Mechanism::rr ||
            bd.entries[k + 1].pair != en.pair ||
            en.rate != -bd.entries[k + 1].rate) {
          note("trial %d: vf entry not exactly cancelled by its rr partner",
               trial);
          ok = false;
        }
      }
    }
  }
  return ok;
}

// ---------------------------------------------------------------------------
// 3. As z -> 0 the zz total tends to twice the free-space zz rate.
bool criterion3() {
  const AtomSpec spec = z_two_level();
  const double z = 1e-3;
  bool ok = true;
  for (double r : {0.0, 0.2, 1.0}) {
    const RateBreakdown bd = (r == 0.0)
                                 ? rate_inertial(spec, "e", z, 1.0)
                                 : rate_accelerated(spec, "e", z, r, 1.0);
    double zz_boundary = 0.0;
    double zz_unbounded = 0.0;
    for (const auto& en : bd.entries) {
      if (en.pair != Pair::zz) continue;
      if (en.part == Part::boundary)
        zz_boundary += en.rate;
      else
        zz_unbounded += en.rate;
    }
    const double ratio = (zz_boundary + zz_unbounded) / zz_unbounded;
    if (!(std::fabs(ratio - 2.0) <= 1e-3)) {
      note("a/w = %g: zz total / unbounded = %.6f (expected 2)", r, ratio);
      ok = false;
    }
  }
  return ok;
}

// ---------------------------------------------------------------------------
// 4. Series probes of the acceleration expansion, plus the recorded
//    verdicts on the variant coefficients.
bool criterion4(const VerifySummary& grid) {
  bool ok = true;
  for (double s : {0.5, 1.0, 2.0}) {
    // The diagonal pairs are even in a and xz is odd; probe the symmetric
    // extension with central differences.
    for (Pair p : {Pair::xx, Pair::yy, Pair::zz}) {
      const auto fn = [&](double a) {
        return f_accel(p, s, std::fabs(a) * s);
      };
      const auto coefs =
          series_probe(fn, 2, ProbeDirection::central, 0.2 / s);
      const double expect = small_a_correction(p, s, 1.0);
      if (!(std::fabs(coefs[2].value - expect) <= 1e-6 * std::fabs(expect))) {
        note("a^2 coefficient of f_%s at sigma = %g: probe %.12e vs %.12e",
             pair_name(p), s, coefs[2].value, expect);
        ok = false;
      }
    }
    const auto fn_xz = [&](double a) {
      const double v = f_accel(Pair::xz, s, std::fabs(a) * s);
      return a < 0.0 ? -v : v;
    };
    const auto coefs =
        series_probe(fn_xz, 1, ProbeDirection::central, 0.2 / s);
    const double expect = small_a_correction(Pair::xz, s, 1.0);
    if (!(std::fabs(coefs[1].value - expect) <= 1e-6 * std::fabs(expect))) {
      note("a^1 coefficient of f_xz at sigma = %g: probe %.12e vs %.12e", s,
           coefs[1].value, expect);
      ok = false;
    }
  }

  int verdicts = 0;
  bool cubic_verdict = false;
  for (const auto& rep : grid.reports) {
    if (rep.quantity_id.find("reject-variant") == std::string::npos) continue;
    ++verdicts;
    if (!rep.pass) {
      note("variant coefficient not rejected: %s", rep.quantity_id.c_str());
      ok = false;
    }
    if (rep.quantity_id.find("32a^3") != std::string::npos) {
      cubic_verdict = true;
    }
  }
  if (verdicts < 4 || !cubic_verdict) {
    note("verification grid recorded %d variant verdicts (cubic-term verdict "
         "%s)",
         verdicts, cubic_verdict ? "present" : "missing");
    ok = false;
  }
  return ok;
}

// ---------------------------------------------------------------------------
// 5. Small-z identity for the xx component.
bool criterion5() {
  const double z = 1e-3;
  bool ok = true;
  for (double a : {0.5, 1.0, 2.0}) {
    const double lhs =
        1.0 + a * a - (3.0 / 16.0) * f_accel(Pair::xx, z, a * z);
    const double rhs =
        (4.0 * a * a + 16.0 * a * a * a * a / 5.0 + 4.0 / 5.0) * z * z;
    if (!(std::fabs(lhs - rhs) <= 1e-3 * rhs)) {
      note("a = %g: lhs %.9e vs rhs %.9e (rel dev %.2e)", a, lhs, rhs,
           std::fabs(lhs - rhs) / rhs);
      ok = false;
    }
  }
  return ok;
}

// ---------------------------------------------------------------------------
// 6. Detailed balance of the boundary totals across three decades of a/w.
bool criterion6() {
  const AtomSpec spec = iso_two_level();
  const double z = 0.5;
  bool ok = true;
  for (double a : {0.1, 1.0, 10.0}) {
    const RateBreakdown upper = rate_accelerated(spec, "e", z, a, 1.0);
    const RateBreakdown lower = rate_accelerated(spec, "g", z, a, 1.0);
    const double deexc = upper.total(Part::boundary);
    const double exc = lower.total(Part::boundary);
    const double ratio = -exc / deexc;
    const double expected = std::exp(-2.0 * kPi / a);
    if (!(std::fabs(ratio - expected) <= 1e-12)) {
      note("a/w = %g: ratio %.17e vs exp(-2 pi w/a) %.17e", a, ratio,
           expected);
      ok = false;
    }
    // Where the thermal factor is representable relative to the rates,
    // require full relative agreement as well.
    if (a >= 1.0 &&
        !(std::fabs(ratio - expected) <= 1e-12 * expected)) {
      note("a/w = %g: relative deviation %.2e", a,
           std::fabs(ratio - expected) / expected);
      ok = false;
    }
  }
  // At a/w = 0.1 the factor ~5e-28 is below the resolution of the assembled
  // totals; verify it at the occupation-number level instead.
  const double n = planck_n(1.0, 0.1);
  const double expected = std::exp(-2.0 * kPi / 0.1);
  if (!(std::fabs(n / (1.0 + n) - expected) <= 1e-12 * expected)) {
    note("occupation-level ratio at a/w = 0.1: %.17e vs %.17e",
         n / (1.0 + n), expected);
    ok = false;
  }
  return ok;
}

// ---------------------------------------------------------------------------
// 7. The free-kernel quadrature alone reproduces the thermal factor.
bool criterion7() {
  bool ok = true;
  for (double a : {0.5, 1.0}) {
    const Trajectory traj = Trajectory::accelerated(1.0, a);
    const FourierValue h = fourier_kernel(KernelKind::wightman_free_hadamard,
                                          Pair::xx, traj, 1.0);
    const FourierValue pj = fourier_kernel(
        KernelKind::wightman_free_pauli_jordan, Pair::xx, traj, 1.0);
    const double got = (h.value + pj.value) * 3.0 * kPi;
    const double expect = (1.0 + a * a) * (1.0 + planck_n(1.0, a));
    if (!(std::fabs(got - expect) <= 1e-3 * expect)) {
      note("a/w = %g: quadrature factor %.9e vs %.9e", a, got, expect);
      ok = false;
    }
  }
  return ok;
}

// ---------------------------------------------------------------------------
// 8. Crossing of the boundary correction and the free-space excess.
bool criterion8() {
  bool ok = true;
  const CrossingResult low =
      nonthermal_crossing(1.0, 0.1, Pair::zz, 0.01, 20.0);
  if (low.roots.empty()) {
    note("no zz crossing found for a/w = 0.1 in (0.01, 20)");
    ok = false;
  }
  for (std::size_t i = 0; i < low.roots.size(); ++i) {
    if (!(low.residuals[i] <= 1e-10)) {
      note("root %zu at z = %.9f has residual %.3e", i, low.roots[i],
           low.residuals[i]);
      ok = false;
    }
  }
  const CrossingResult high =
      nonthermal_crossing(1.0, 10.0, Pair::zz, 0.01, 20.0);
  if (!high.roots.empty()) {
    note("unexpected zz crossing for a/w = 10 at z = %.9f", high.roots[0]);
    ok = false;
  }
  return ok;
}

// ---------------------------------------------------------------------------
// 9. Invariance under (w, z, a) -> (7w, z/7, 7a), dipoles rescaled by 1/7.
bool criterion9() {
  bool ok = true;
  const double z = 0.8;
  const double a = 1.3;
  for (Pair p : {Pair::xx, Pair::yy, Pair::zz, Pair::xz}) {
    const double f1 = f_accel(p, z, a * z);
    const double z7 = z / 7.0;
    const double f7 = f_accel(p, 7.0 * z7, (7.0 * a) * z7);
    if (!close_rel(f7, f1, 1e-12)) {
      note("f_%s not scale invariant: %.17e vs %.17e", pair_name(p), f7, f1);
      ok = false;
    }
  }

  const AtomSpec base = iso_two_level();
  AtomSpec scaled = base;
  for (auto& level : scaled.levels) level.energy *= 7.0;
  for (auto& dip : scaled.dipoles)
    for (auto& component : dip.vector) component /= 7.0;

  for (double accel : {0.0, a}) {
    const RateBreakdown r1 =
        (accel == 0.0) ? rate_inertial(base, "e", z, 1.0)
                       : rate_accelerated(base, "e", z, accel, 1.0);
    const RateBreakdown r7 =
        (accel == 0.0)
            ? rate_inertial(scaled, "e", z / 7.0, 1.0)
            : rate_accelerated(scaled, "e", z / 7.0, 7.0 * accel, 1.0);
    if (r1.entries.size() != r7.entries.size()) {
      note("entry counts differ under rescaling");
      ok = false;
      continue;
    }
    for (std::size_t k = 0; k < r1.entries.size(); ++k) {
      const double want = 49.0 * r1.entries[k].rate;
      const double got = r7.entries[k].rate;
      if (!(std::fabs(got - want) <=
            1e-12 * std::max(std::fabs(want), 1e-300))) {
        note("a = %g, entry %zu (%s %s): %.17e vs 49 * rate = %.17e", accel,
             k, mechanism_name(r1.entries[k].mechanism),
             pair_name(r1.entries[k].pair), got, want);
        ok = false;
      }
    }
    if (!close_rel(r7.total(), 49.0 * r1.total(), 1e-12)) {
      note("a = %g: totals %.17e vs %.17e", accel, r7.total(),
           49.0 * r1.total());
      ok = false;
    }
  }
  return ok;
}

// ---------------------------------------------------------------------------
// 10. Parallel sweep determinism, byte for byte.
bool criterion10() {
  const AtomSpec spec = iso_two_level();
  SweepPlan plan;
  plan.variable = SweepPlan::Variable::z;
  plan.from = 0.1;
  plan.to = 20.0;
  plan.points = 512;
  plan.log_spacing = true;
  plan.fixed_a = 0.7;
  plan.threads = 1;
  const std::string serial = run_sweep(spec, "e", plan);
  plan.threads = 8;
  const std::string parallel = run_sweep(spec, "e", plan);
  bool ok = !serial.empty() && serial == parallel;
  if (!ok) note("sweep output differs between 1 and 8 threads");
  std::size_t lines = 0;
  for (char c : serial)
    if (c == '\n') ++lines;
  if (lines != 1 + 512 * 15) {
    note("unexpected sweep size: %zu lines", lines);
    ok = false;
  }
  return ok;
}

}  // namespace

int main() {
  std::printf("acceptance gate: boundary rate library\n");

  report(1, criterion1(),
         "inertial ground state exactly stable for 10 randomized atoms "
         "(total 0 to 1e-14, vf = -rr per entry)");

  const VerifySummary grid = run_verify_grid(VerifyPreset::defaults, 1e-3);
  report(2, grid.all_pass && grid.seconds <= 180.0,
         "closed forms match the quadrature oracle on the default grid at "
         "rel tol 1e-3 (%zu rows, %.1f s)",
         grid.reports.size(), grid.seconds);

  report(3, criterion3(),
         "zz total approaches twice the free-space zz rate as z -> 0 "
         "(inertial and a/w in {0.2, 1})");
  report(4, criterion4(grid),
         "series probes recover the acceleration-expansion coefficients to "
         "1e-6 and reject the variant coefficients");
  report(5, criterion5(),
         "small-z xx combination matches (4a^2 + 16a^4/5 + 4/5) z^2 within "
         "0.1%%");
  report(6, criterion6(),
         "boundary excitation/deexcitation ratio equals exp(-2 pi w/a) to "
         "1e-12 for a/w in {0.1, 1, 10}");
  report(7, criterion7(),
         "free-kernel quadrature reproduces (1 + a^2/w^2)(1 + n) within "
         "1e-3 at a/w in {0.5, 1}");
  report(8, criterion8(),
         "zz crossing exists for a/w = 0.1 with residual <= 1e-10 and is "
         "absent for a/w = 10");
  report(9, criterion9(),
         "f components and per-unit-e2 rates invariant under "
         "(w, z, a) -> (7w, z/7, 7a) with dipoles / 7, to 1e-12");
  report(10, criterion10(),
         "512-point sweep CSV is byte-identical for 1 and 8 worker threads");

  std::printf("%d of 10 criteria passed\n", 10 - g_failures);
  return g_failures;
}
