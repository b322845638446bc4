#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bqed/oracle.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>

using namespace bqed;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

// Strictly relative closeness with an optional absolute floor; avoids the
// default Approx scale term, which would wash out small-magnitude targets.
void check_close(double actual, double expected, double rel,
                 double abs_floor = 0.0) {
  CAPTURE(actual);
  CAPTURE(expected);
  CAPTURE(rel);
  CHECK(std::fabs(actual - expected) <=
        std::max(abs_floor, rel * std::fabs(expected)));
}

AtomSpec iso_two_level() {
  AtomSpec spec;
  spec.name = "iso";
  spec.levels = {{"g", 0.0}, {"e", 1.0}};
  const double c = 1.0 / std::sqrt(3.0);
  spec.dipoles = {{"e", "g", {{{c, 0.0}, {c, 0.0}, {c, 0.0}}}}};
  spec.initial_state = "e";
  return spec;
}

AtomSpec z_two_level() {
  AtomSpec spec;
  spec.name = "zpol";
  spec.levels = {{"g", 0.0}, {"e", 1.0}};
  spec.dipoles = {{"e", "g", {{{0.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}}}}};
  spec.initial_state = "e";
  return spec;
}

}  // namespace

TEST_CASE("series probe recovers cubic polynomial coefficients") {
  auto fn = [](double h) { return 2.0 - 3.0 * h + 0.5 * h * h + h * h * h; };
  for (ProbeDirection dir : {ProbeDirection::forward, ProbeDirection::central}) {
    CAPTURE(dir == ProbeDirection::forward);
    const auto c = series_probe(fn, 3, dir, 0.5);
    REQUIRE(c.size() == 4);
    CHECK(std::fabs(c[0].value - 2.0) <= 1e-9);
    CHECK(std::fabs(c[1].value + 3.0) <= 1e-9);
    CHECK(std::fabs(c[2].value - 0.5) <= 1e-9);
    CHECK(std::fabs(c[3].value - 1.0) <= 1e-9);
  }
}

TEST_CASE("series probe handles a transcendental function") {
  auto fn = [](double h) { return std::exp(h); };
  const auto c = series_probe(fn, 4, ProbeDirection::central, 0.5);
  const double truth[] = {1.0, 1.0, 0.5, 1.0 / 6.0, 1.0 / 24.0};
  for (int k = 0; k <= 3; ++k) {
    CAPTURE(k);
    check_close(c[k].value, truth[k], 1e-6);
    CHECK(c[k].error >= 0.0);
  }
  // The highest extracted coefficient has no Richardson refinement left
  // after the lower ones are peeled off; it is the roughest of the set.
  check_close(c[4].value, truth[4], 1e-4);
}

TEST_CASE("series probe rejects bad arguments") {
  auto fn = [](double) { return 0.0; };
  CHECK_THROWS_AS((void)series_probe(fn, -1), std::invalid_argument);
  CHECK_THROWS_AS((void)series_probe(fn, 2, ProbeDirection::central, 0.0),
                  std::invalid_argument);
}

TEST_CASE("inertial mirror transforms match the closed forms") {
  const double z = 0.7;
  const Trajectory traj = Trajectory::inertial(z);
  const double w = 1.0;
  // even part: -(w^3/32pi) f, odd part the same at this frequency (no
  // thermal factor on an inertial worldline)
  const double cxx = -(1.0 / (32.0 * kPi)) * f_x(w * z);
  const double czz = -(1.0 / (32.0 * kPi)) * f_z(w * z);

  const FourierValue hxx = fourier_kernel(KernelKind::hadamard, Pair::xx,
                                          traj, w);
  const FourierValue hzz = fourier_kernel(KernelKind::hadamard, Pair::zz,
                                          traj, w);
  const FourierValue pxx = fourier_kernel(KernelKind::pauli_jordan, Pair::xx,
                                          traj, w);
  const FourierValue pzz = fourier_kernel(KernelKind::pauli_jordan, Pair::zz,
                                          traj, w);
  check_close(hxx.value, cxx, 1e-4);
  check_close(hzz.value, czz, 1e-4);
  check_close(pxx.value, cxx, 1e-4);
  check_close(pzz.value, czz, 1e-4);
  CHECK(hxx.ladder.size() == 3);  // default regulator ladder
  CHECK(hxx.error >= 0.0);
}

TEST_CASE("accelerated mirror transforms match the closed forms") {
  const double z = 0.8;
  const double a = 1.25;  // eta = a z = 1
  const Trajectory traj = Trajectory::accelerated(z, a);
  const double w = 1.0;
  const double n = planck_n(w, a);
  for (Pair p : {Pair::xx, Pair::yy, Pair::zz, Pair::xz}) {
    CAPTURE(pair_name(p));
    const double f = f_accel(p, w * z, a * z);
    const double had = -(1.0 / (32.0 * kPi)) * f * (1.0 + 2.0 * n);
    const double pj = -(1.0 / (32.0 * kPi)) * f;
    check_close(fourier_kernel(KernelKind::hadamard, p, traj, w).value, had,
                1e-4);
    check_close(fourier_kernel(KernelKind::pauli_jordan, p, traj, w).value,
                pj, 1e-4);
  }
}

TEST_CASE("transform parity in the frequency is exact") {
  const Trajectory traj = Trajectory::accelerated(0.6, 1.0);
  for (KernelKind kind : {KernelKind::hadamard, KernelKind::pauli_jordan}) {
    const FourierValue pos = fourier_kernel(kind, Pair::zz, traj, 1.3);
    const FourierValue neg = fourier_kernel(kind, Pair::zz, traj, -1.3);
    if (kind == KernelKind::hadamard) {
      CHECK(neg.value == pos.value);
    } else {
      CHECK(neg.value == -pos.value);
    }
  }
}

TEST_CASE("identically-zero components short-circuit") {
  const FourierValue v1 = fourier_kernel(
      KernelKind::hadamard, Pair::xz, Trajectory::inertial(0.9), 1.0);
  CHECK(v1.value == 0.0);
  CHECK(v1.error == 0.0);
  const FourierValue v2 = fourier_kernel(
      KernelKind::wightman_free_pauli_jordan, Pair::xz,
      Trajectory::accelerated(0.9, 1.0), 1.0);
  CHECK(v2.value == 0.0);
  CHECK(v2.error == 0.0);
}

TEST_CASE("free-space transforms match the closed forms") {
  const double w = 1.0;
  SUBCASE("inertial") {
    const Trajectory traj = Trajectory::inertial(1.0);
    const double expect = 1.0 / (6.0 * kPi);  // K = 1, n = 0
    check_close(fourier_kernel(KernelKind::wightman_free_hadamard, Pair::xx,
                               traj, w)
                    .value,
                expect, 1e-4);
    check_close(fourier_kernel(KernelKind::wightman_free_pauli_jordan,
                               Pair::xx, traj, w)
                    .value,
                expect, 1e-4);
  }
  SUBCASE("accelerated, deexcitation factor K(1+n)") {
    for (double a : {0.5, 1.0}) {
      CAPTURE(a);
      const Trajectory traj = Trajectory::accelerated(1.0, a);
      const double K = 1.0 + a * a / (w * w);
      const double n = planck_n(w, a);
      const double sum =
          fourier_kernel(KernelKind::wightman_free_hadamard, Pair::zz, traj,
                         w)
              .value +
          fourier_kernel(KernelKind::wightman_free_pauli_jordan, Pair::zz,
                         traj, w)
              .value;
      check_close(sum * 3.0 * kPi / (w * w * w), K * (1.0 + n), 1e-3);
    }
  }
  SUBCASE("accelerated, negative frequency leaves only the thermal part") {
    const double a = 1.0;
    const Trajectory traj = Trajectory::accelerated(1.0, a);
    const double K = 2.0;
    const double n = planck_n(w, a);
    const double sum =
        fourier_kernel(KernelKind::wightman_free_hadamard, Pair::xx, traj,
                       -w)
            .value +
        fourier_kernel(KernelKind::wightman_free_pauli_jordan, Pair::xx,
                       traj, -w)
            .value;
    check_close(sum, (1.0 / (3.0 * kPi)) * K * n, 5e-3);
  }
}

TEST_CASE("a custom regulator ladder is honoured") {
  QuadratureConfig cfg;
  cfg.eps_ladder = {0.04, 0.02, 0.01, 0.005};
  const Trajectory traj = Trajectory::inertial(0.5);
  const FourierValue v =
      fourier_kernel(KernelKind::hadamard, Pair::xx, traj, 1.0, cfg);
  CHECK(v.ladder.size() == 4);
  check_close(v.value, -(1.0 / (32.0 * kPi)) * f_x(0.5), 1e-4);
  for (const auto& rung : v.ladder) {
    CHECK(std::isfinite(rung.second));
    CHECK(rung.first > 0.0);
  }
}

TEST_CASE("bad transform arguments are rejected") {
  const Trajectory traj = Trajectory::inertial(1.0);
  CHECK_THROWS_AS(
      (void)fourier_kernel(KernelKind::hadamard, Pair::xx, traj, 0.0),
      std::domain_error);
  QuadratureConfig cfg;
  cfg.eps_ladder = {};
  CHECK_THROWS_AS(
      (void)fourier_kernel(KernelKind::hadamard, Pair::xx, traj, 1.0, cfg),
      std::invalid_argument);
  cfg.eps_ladder = {0.02, -0.01};
  CHECK_THROWS_AS(
      (void)fourier_kernel(KernelKind::hadamard, Pair::xx, traj, 1.0, cfg),
      std::invalid_argument);
}

TEST_CASE("excitation-channel mirror transforms cancel on the inertial "
          "worldline") {
  // At negative frequency the ordered kernel has no spectral weight: the
  // even and odd transforms must cancel identically, for every regulator.
  QuadratureConfig tight;
  tight.abs_tol = 1e-12;
  tight.rel_tol = 1e-11;
  tight.max_subdivisions = 20000;
  const Trajectory traj = Trajectory::inertial(0.5);
  for (Pair p : {Pair::xx, Pair::zz}) {
    CAPTURE(pair_name(p));
    const FourierValue h =
        fourier_kernel(KernelKind::hadamard, p, traj, -1.0, tight);
    const FourierValue x =
        fourier_kernel(KernelKind::pauli_jordan, p, traj, -1.0, tight);
    CHECK(std::fabs(h.value + x.value) <= 1e-10);
    // the cancellation already holds rung by rung
    for (std::size_t i = 0; i < h.ladder.size(); ++i) {
      CHECK(std::fabs(h.ladder[i].second + x.ladder[i].second) <= 1e-10);
    }
  }
}

TEST_CASE("rate verification: inertial excited state all-pass") {
  const AtomSpec spec = iso_two_level();
  const auto reports =
      verify_rate(spec, "e", Trajectory::inertial(1.0), {}, 1e-3, 1.0);
  // 4 pairs x {vf, rr} + 3 diagonal unbounded rows
  REQUIRE(reports.size() == 11);
  for (const auto& rep : reports) {
    CAPTURE(rep.quantity_id);
    CAPTURE(rep.closed_form_value);
    CAPTURE(rep.oracle_value);
    CHECK(rep.pass);
    CHECK(rep.quantity_id.find("e->g") == 0);
  }
}

TEST_CASE("rate verification: accelerated excited state all-pass") {
  const AtomSpec spec = iso_two_level();
  const auto reports =
      verify_rate(spec, "e", Trajectory::accelerated(1.0, 1.0), {}, 1e-3,
                  1.0);
  REQUIRE(reports.size() == 11);
  for (const auto& rep : reports) {
    CAPTURE(rep.quantity_id);
    CHECK(rep.pass);
    if (rep.closed_form_value != 0.0) {
      CHECK(!rep.extrapolation_curve.empty());
      CHECK(rep.abs_error_estimate >= 0.0);
    }
  }
}

TEST_CASE("rate verification: vanishing polarization rows are exact zeros") {
  const AtomSpec spec = z_two_level();
  const auto reports =
      verify_rate(spec, "e", Trajectory::accelerated(0.8, 1.25), {}, 1e-3,
                  1.0);
  int zero_rows = 0;
  for (const auto& rep : reports) {
    CAPTURE(rep.quantity_id);
    CHECK(rep.pass);
    const bool zz_row = rep.quantity_id.find(" zz ") != std::string::npos;
    if (!zz_row) {
      CHECK(rep.closed_form_value == 0.0);
      CHECK(rep.oracle_value == 0.0);
      CHECK(rep.extrapolation_curve.empty());  // no quadrature was run
      ++zero_rows;
    }
  }
  CHECK(zero_rows == 8);  // xx, yy, xz rows carry no weight for a z dipole
}
