// Command-line front end: rate evaluation, parameter sweeps, crossing
// searches, unit conversion, and the closed-form-vs-quadrature
// verification grid.
//
// Exit codes: 0 success, 2 usage/parse/validation error, 3 numeric
// domain error, 4 I/O error, 5 verification failure.

#include <CLI11.hpp>

#include <bqed/atom.hpp>
#include <bqed/constants.hpp>
#include <bqed/field_correlations.hpp>
#include <bqed/rates.hpp>
#include <bqed/sweep.hpp>
#include <bqed/units.hpp>
#include <bqed/verify.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 2;
constexpr int kDomain = 3;
constexpr int kIo = 4;
constexpr int kVerifyFail = 5;

std::string g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

struct RatesOpts {
  std::string atom_path;
  std::string state;
  double z = 0.0;
  std::optional<double> accel;
  std::optional<double> velocity;
  double e2 = bqed::kDefaultCoupling;
};

struct SweepOpts {
  std::string atom_path;
  std::string state;
  std::string var = "z";
  double from = 0.0;
  double to = 0.0;
  int points = 128;
  bool log_spacing = false;
  double fixed_z = 1.0;
  double fixed_a = 0.0;
  double omega_scale = 1.0;
  double e2 = bqed::kDefaultCoupling;
  int threads = 1;
  std::string out;
};

struct CrossingOpts {
  double omega = 0.0;
  double accel = 0.0;
  std::string component = "zz";
  double z_lo = 0.0;
  double z_hi = 0.0;
  int max_roots = 8;
};

struct UnitsOpts {
  std::optional<double> omega_si;
  std::optional<double> z_si;
  std::optional<double> a_si;
};

struct VerifyOpts {
  std::string grid = "default";
  double rel_tol = 1e-3;
};

std::string resolve_state(const bqed::AtomSpec& spec,
                          const std::string& requested) {
  return requested.empty() ? spec.initial_state : requested;
}

int run_rates(const RatesOpts& opt) {
  if (opt.accel && opt.velocity) {
    std::fprintf(stderr,
                 "error: --accel and --velocity are mutually exclusive "
                 "(pick one trajectory kind)\n");
    return kUsage;
  }
  const bqed::AtomSpec spec = bqed::load_atom_file(opt.atom_path);
  const std::string b = resolve_state(spec, opt.state);
  // Construct the trajectory first so that kinematic inputs are
  // validated (z > 0, |v| < 1, a > 0) before any rate work starts.
  bqed::RateBreakdown bd;
  if (opt.accel) {
    bqed::Trajectory::accelerated(opt.z, *opt.accel);
    bd = bqed::rate_accelerated(spec, b, opt.z, *opt.accel, opt.e2);
  } else {
    bqed::Trajectory::inertial(opt.z, opt.velocity.value_or(0.0));
    bd = bqed::rate_inertial(spec, b, opt.z, opt.e2);
  }
  std::printf("atom: %s\n", spec.name.c_str());
  std::printf("state: %s\n", b.c_str());
  if (opt.accel) {
    std::printf("trajectory: uniformly accelerated, z = %s, a = %s\n",
                g17(opt.z).c_str(), g17(*opt.accel).c_str());
  } else if (opt.velocity && *opt.velocity != 0.0) {
    std::printf(
        "trajectory: inertial, z = %s, v = %s (parallel drift; the rates "
        "are drift-independent)\n",
        g17(opt.z).c_str(), g17(*opt.velocity).c_str());
  } else {
    std::printf("trajectory: inertial, z = %s\n", g17(opt.z).c_str());
  }
  std::printf("coupling e2 = %s\n\n", g17(bd.coupling_e2).c_str());
  std::printf("%-10s %-4s %-9s %-9s %-13s %s\n", "partner", "pair",
              "mechanism", "part", "channel", "rate");
  for (const bqed::RateEntry& e : bd.entries) {
    std::printf("%-10s %-4s %-9s %-9s %-13s %s\n", e.partner.c_str(),
                bqed::pair_name(e.pair), bqed::mechanism_name(e.mechanism),
                bqed::part_name(e.part), bqed::channel_name(e.channel),
                g17(e.rate).c_str());
  }
  std::printf("\nboundary subtotal  = %s\n",
              g17(bd.total(bqed::Part::boundary)).c_str());
  std::printf("unbounded subtotal = %s\n",
              g17(bd.total(bqed::Part::unbounded)).c_str());
  std::printf("grand total        = %s\n", g17(bd.total()).c_str());
  return kOk;
}

int run_sweep_cmd(const SweepOpts& opt) {
  const bqed::AtomSpec spec = bqed::load_atom_file(opt.atom_path);
  const std::string b = resolve_state(spec, opt.state);
  bqed::SweepPlan plan;
  if (opt.var == "z") {
    plan.variable = bqed::SweepPlan::Variable::z;
  } else if (opt.var == "a") {
    plan.variable = bqed::SweepPlan::Variable::a;
  } else {
    plan.variable = bqed::SweepPlan::Variable::omega;
  }
  plan.from = opt.from;
  plan.to = opt.to;
  plan.points = opt.points;
  plan.log_spacing = opt.log_spacing;
  plan.fixed_z = opt.fixed_z;
  plan.fixed_a = opt.fixed_a;
  plan.omega_scale = opt.omega_scale;
  plan.e2 = opt.e2;
  plan.threads = opt.threads;
  // Open the sink before computing so an unwritable path fails fast.
  std::ofstream file;
  if (!opt.out.empty()) {
    file.open(opt.out, std::ios::binary);
    if (!file) {
      std::fprintf(stderr, "error: cannot open output path \"%s\"\n",
                   opt.out.c_str());
      return kIo;
    }
  }
  const std::string csv = bqed::run_sweep(spec, b, plan);
  if (opt.out.empty()) {
    std::fwrite(csv.data(), 1, csv.size(), stdout);
    return kOk;
  }
  file << csv;
  file.flush();
  if (!file.good()) {
    std::fprintf(stderr, "error: failed writing \"%s\"\n", opt.out.c_str());
    return kIo;
  }
  return kOk;
}

int run_crossing(const CrossingOpts& opt) {
  const bqed::Pair component = bqed::pair_from_name(opt.component);
  const bqed::CrossingResult res = bqed::nonthermal_crossing(
      opt.omega, opt.accel, component, opt.z_lo, opt.z_hi, opt.max_roots);
  std::printf("component %s, omega = %s, a = %s, z in [%s, %s]\n",
              bqed::pair_name(res.component), g17(opt.omega).c_str(),
              g17(opt.accel).c_str(), g17(opt.z_lo).c_str(),
              g17(opt.z_hi).c_str());
  if (res.roots.empty()) {
    std::printf("no roots\n");
    return kOk;
  }
  for (std::size_t i = 0; i < res.roots.size(); ++i) {
    std::printf("root: z = %s  sigma = %s  residual = %.3e\n",
                g17(res.roots[i]).c_str(),
                g17(opt.omega * res.roots[i]).c_str(), res.residuals[i]);
  }
  return kOk;
}

int run_units(const UnitsOpts& opt) {
  bqed::UnitContext ctx;
  ctx.omega_si = opt.omega_si;
  ctx.z_si = opt.z_si;
  ctx.a_si = opt.a_si;
  std::fputs(bqed::format_units_report(ctx).c_str(), stdout);
  return kOk;
}

int run_verify(const VerifyOpts& opt) {
  const bqed::VerifyPreset preset = bqed::verify_preset_from_name(opt.grid);
  const bqed::VerifySummary summary =
      bqed::run_verify_grid(preset, opt.rel_tol);
  std::fputs(bqed::format_verify_table(summary).c_str(), stdout);
  return summary.all_pass ? kOk : kVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "rate of change of the mean energy of a multilevel atom near a "
      "perfectly conducting plane"};
  app.require_subcommand(1);

  RatesOpts ro;
  CLI::App* rates = app.add_subcommand(
      "rates", "evaluate one rate breakdown at a single point");
  rates->add_option("--atom", ro.atom_path, "atom description JSON file")
      ->required();
  rates->add_option("--state", ro.state,
                    "level id (default: the file's initial_state)");
  rates->add_option("--z", ro.z, "distance from the plane")->required();
  rates->add_option("--accel", ro.accel, "proper acceleration (> 0)");
  rates->add_option("--velocity", ro.velocity,
                    "constant drift parallel to the plane, |v| < 1");
  rates->add_option("--e2", ro.e2, "squared-charge coupling prefactor")
      ->capture_default_str();

  SweepOpts so;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "sweep one parameter and emit a CSV rate table");
  sweep->add_option("--atom", so.atom_path, "atom description JSON file")
      ->required();
  sweep->add_option("--state", so.state,
                    "level id (default: the file's initial_state)");
  sweep->add_option("--var", so.var, "swept variable")
      ->required()
      ->check(CLI::IsMember({"z", "a", "omega"}));
  sweep->add_option("--from", so.from, "first grid value")->required();
  sweep->add_option("--to", so.to, "last grid value")->required();
  sweep->add_option("--points", so.points, "grid size (>= 2)")
      ->capture_default_str();
  sweep->add_flag("--log", so.log_spacing, "logarithmic spacing");
  sweep->add_option("--z", so.fixed_z, "fixed distance when not swept")
      ->capture_default_str();
  sweep->add_option("--accel", so.fixed_a,
                    "fixed acceleration when not swept (0 = inertial)")
      ->capture_default_str();
  sweep->add_option("--omega", so.omega_scale,
                    "level-energy scale when omega is not swept")
      ->capture_default_str();
  sweep->add_option("--e2", so.e2, "squared-charge coupling prefactor")
      ->capture_default_str();
  sweep->add_option("--threads", so.threads, "worker threads")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  sweep->add_option("--out", so.out, "output CSV path (default: stdout)");

  CrossingOpts co;
  CLI::App* crossing = app.add_subcommand(
      "crossing",
      "find distances where the boundary correction cancels the "
      "acceleration-induced free-space excess");
  crossing->add_option("--omega", co.omega, "transition frequency (> 0)")
      ->required();
  crossing->add_option("--accel", co.accel, "proper acceleration (> 0)")
      ->required();
  crossing->add_option("--component", co.component,
                       "diagonal component: xx, yy or zz")
      ->capture_default_str();
  crossing->add_option("--zmin", co.z_lo, "search range start")->required();
  crossing->add_option("--zmax", co.z_hi, "search range end")->required();
  crossing->add_option("--max-roots", co.max_roots,
                       "stop after this many roots")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  UnitsOpts uo;
  CLI::App* units = app.add_subcommand(
      "units", "convert laboratory CGS values to the dimensionless inputs");
  units->add_option("--omega-si", uo.omega_si, "angular frequency in rad/s")
      ->check(CLI::PositiveNumber);
  units->add_option("--z-si", uo.z_si, "distance in cm")
      ->check(CLI::PositiveNumber);
  units->add_option("--a-si,--accel-si", uo.a_si,
                    "proper acceleration in cm/s^2")
      ->check(CLI::PositiveNumber);

  VerifyOpts vo;
  CLI::App* verify = app.add_subcommand(
      "verify", "run the closed-form-vs-quadrature verification grid");
  verify->add_option("--grid", vo.grid, "grid preset: default or smoke")
      ->capture_default_str();
  verify->add_option("--rel-tol", vo.rel_tol,
                     "pass tolerance, relative to the closed form")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (rates->parsed()) return run_rates(ro);
    if (sweep->parsed()) return run_sweep_cmd(so);
    if (crossing->parsed()) return run_crossing(co);
    if (units->parsed()) return run_units(uo);
    if (verify->parsed()) return run_verify(vo);
  } catch (const bqed::AtomParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kUsage;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kDomain;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kDomain;
  }
  return kOk;
}
