// Python bindings for the boundary rate library.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <bqed/atom.hpp>
#include <bqed/constants.hpp>
#include <bqed/field_correlations.hpp>
#include <bqed/oracle.hpp>
#include <bqed/rates.hpp>
#include <bqed/special_functions.hpp>
#include <bqed/sweep.hpp>
#include <bqed/verify.hpp>

#include <stdexcept>
#include <string>

namespace py = pybind11;

namespace {

using namespace bqed;

py::dict breakdown_to_dict(const RateBreakdown& bd) {
  py::list entries;
  for (const auto& en : bd.entries) {
    py::dict row;
    row["partner"] = en.partner;
    row["omega"] = en.omega;
    row["mechanism"] = mechanism_name(en.mechanism);
    row["part"] = part_name(en.part);
    row["channel"] = channel_name(en.channel);
    row["pair"] = pair_name(en.pair);
    row["rate"] = en.rate;
    entries.append(row);
  }
  py::dict out;
  out["coupling_e2"] = bd.coupling_e2;
  out["entries"] = entries;
  out["total"] = bd.total();
  out["boundary_total"] = bd.total(Part::boundary);
  out["unbounded_total"] = bd.total(Part::unbounded);
  return out;
}

KernelKind kernel_from_name(const std::string& name) {
  if (name == "hadamard") return KernelKind::hadamard;
  if (name == "pauli_jordan") return KernelKind::pauli_jordan;
  if (name == "wightman_free_hadamard")
    return KernelKind::wightman_free_hadamard;
  if (name == "wightman_free_pauli_jordan")
    return KernelKind::wightman_free_pauli_jordan;
  throw std::invalid_argument(
      "unknown kernel kind: " + name +
      " (expected hadamard, pauli_jordan, wightman_free_hadamard, or "
      "wightman_free_pauli_jordan)");
}

Trajectory trajectory_for(double z, double a) {
  return a > 0.0 ? Trajectory::accelerated(z, a) : Trajectory::inertial(z);
}

}  // namespace

PYBIND11_MODULE(bqed, m) {
  m.doc() =
      "Energy-rate contributions for a multilevel system near a perfectly "
      "reflecting plane: vacuum-fluctuation and radiation-reaction parts, "
      "inertial or uniformly accelerated trajectories, with a quadrature "
      "oracle for cross-checks.";

  m.attr("DEFAULT_COUPLING") = kDefaultCoupling;

  py::class_<Level>(m, "Level")
      .def(py::init<>())
      .def(py::init([](std::string id, double energy) {
             Level lv;
             lv.id = std::move(id);
             lv.energy = energy;
             return lv;
           }),
           py::arg("id"), py::arg("energy"))
      .def_readwrite("id", &Level::id)
      .def_readwrite("energy", &Level::energy);

  py::class_<DipoleElement>(m, "DipoleElement")
      .def(py::init<>())
      .def_readwrite("from_level", &DipoleElement::from)
      .def_readwrite("to_level", &DipoleElement::to)
      .def_readwrite("vector", &DipoleElement::vector);

  py::class_<AtomSpec>(m, "AtomSpec")
      .def(py::init<>())
      .def_readwrite("name", &AtomSpec::name)
      .def_readwrite("levels", &AtomSpec::levels)
      .def_readwrite("dipoles", &AtomSpec::dipoles)
      .def_readwrite("initial_state", &AtomSpec::initial_state);

  m.def("load_atom_file", &load_atom_file, py::arg("path"),
        "Read and parse an atom description file.");
  m.def("parse_atom_json", &parse_atom_json, py::arg("text"),
        "Parse the strict JSON atom format.");
  m.def("validate", &validate, py::arg("spec"),
        "List of structural problems; empty means valid.");

  m.def(
      "transitions_from",
      [](const AtomSpec& spec, const std::string& b) {
        py::list out;
        for (const auto& tr : transitions_from(spec, b)) {
          py::dict row;
          row["partner"] = tr.partner;
          row["omega"] = tr.omega;
          row["polarization"] = tr.polarization;
          out.append(row);
        }
        return out;
      },
      py::arg("spec"), py::arg("state"),
      "Transitions out of a level: partner, signed frequency, and the "
      "3x3 polarization matrix.");

  m.def(
      "f_x", [](double sigma) { return f_x(sigma); }, py::arg("sigma"),
      "Inertial boundary modulation for x/y dipoles.");
  m.def(
      "f_z", [](double sigma) { return f_z(sigma); }, py::arg("sigma"),
      "Inertial boundary modulation for z dipoles.");
  m.def(
      "f_accel",
      [](const std::string& pair, double sigma, double eta) {
        return f_accel(pair_from_name(pair), sigma, eta);
      },
      py::arg("pair"), py::arg("sigma"), py::arg("eta"),
      "Accelerated boundary modulation for one component pair.");
  m.def(
      "small_a_correction",
      [](const std::string& pair, double sigma, double omega_scale) {
        return small_a_correction(pair_from_name(pair), sigma, omega_scale);
      },
      py::arg("pair"), py::arg("sigma"), py::arg("omega_scale") = 1.0,
      "Leading acceleration-expansion coefficient at fixed sigma.");
  m.def("planck_n", &planck_n, py::arg("omega"), py::arg("accel"),
        "Thermal occupation at the acceleration temperature a / 2 pi.");

  m.def(
      "rate_inertial",
      [](const AtomSpec& spec, const std::string& state, double z,
         double e2) { return breakdown_to_dict(rate_inertial(spec, state, z, e2)); },
      py::arg("spec"), py::arg("state"), py::arg("z"),
      py::arg("e2") = kDefaultCoupling,
      "Energy-rate breakdown for a static level at distance z.");
  m.def(
      "rate_accelerated",
      [](const AtomSpec& spec, const std::string& state, double z, double a,
         double e2) {
        return breakdown_to_dict(rate_accelerated(spec, state, z, a, e2));
      },
      py::arg("spec"), py::arg("state"), py::arg("z"), py::arg("a"),
      py::arg("e2") = kDefaultCoupling,
      "Energy-rate breakdown for uniform proper acceleration a.");
  m.def(
      "unbounded_rate",
      [](const AtomSpec& spec, const std::string& state, double a,
         double e2) {
        return breakdown_to_dict(unbounded_rate(spec, state, a, e2));
      },
      py::arg("spec"), py::arg("state"), py::arg("a") = 0.0,
      py::arg("e2") = kDefaultCoupling,
      "Free-space (boundary-independent) contributions only.");

  m.def(
      "nonthermal_crossing",
      [](double omega, double a, const std::string& component, double z_lo,
         double z_hi, int max_roots) {
        const CrossingResult res = nonthermal_crossing(
            omega, a, pair_from_name(component), z_lo, z_hi, max_roots);
        py::dict out;
        out["component"] = pair_name(res.component);
        out["roots"] = res.roots;
        out["residuals"] = res.residuals;
        return out;
      },
      py::arg("omega"), py::arg("a"), py::arg("component") = "zz",
      py::arg("z_lo") = 1e-2, py::arg("z_hi") = 20.0,
      py::arg("max_roots") = 8,
      "Distances where the boundary correction cancels the free-space "
      "acceleration excess.");

  m.def(
      "fourier_kernel",
      [](const std::string& kind, const std::string& pair, double omega,
         double z, double a) {
        const FourierValue fv = fourier_kernel(
            kernel_from_name(kind), pair_from_name(pair),
            trajectory_for(z, a), omega);
        py::dict out;
        out["value"] = fv.value;
        out["error"] = fv.error;
        out["ladder"] = fv.ladder;
        return out;
      },
      py::arg("kind"), py::arg("pair"), py::arg("omega"), py::arg("z") = 1.0,
      py::arg("a") = 0.0,
      "Regulated quadrature transform of one kernel component "
      "(the independent cross-check path).");

  m.def(
      "run_sweep",
      [](const AtomSpec& spec, const std::string& state,
         const std::string& variable, double start, double stop, int points,
         bool log, double fixed_z, double fixed_a, double omega_scale,
         double e2, int threads) {
        SweepPlan plan;
        if (variable == "z")
          plan.variable = SweepPlan::Variable::z;
        else if (variable == "a")
          plan.variable = SweepPlan::Variable::a;
        else if (variable == "omega")
          plan.variable = SweepPlan::Variable::omega;
        else
          throw std::invalid_argument("variable must be z, a, or omega");
        plan.from = start;
        plan.to = stop;
        plan.points = points;
        plan.log_spacing = log;
        plan.fixed_z = fixed_z;
        plan.fixed_a = fixed_a;
        plan.omega_scale = omega_scale;
        plan.e2 = e2;
        plan.threads = threads;
        return bqed::run_sweep(spec, state, plan);
      },
      py::arg("spec"), py::arg("state"), py::arg("variable"),
      py::arg("start"), py::arg("stop"), py::arg("points") = 128,
      py::arg("log") = false, py::arg("fixed_z") = 1.0,
      py::arg("fixed_a") = 0.0, py::arg("omega_scale") = 1.0,
      py::arg("e2") = kDefaultCoupling, py::arg("threads") = 1,
      "One-dimensional rate sweep; returns the CSV text.");

  m.def(
      "verify",
      [](const std::string& grid, double rel_tol) {
        const VerifySummary summary =
            run_verify_grid(verify_preset_from_name(grid), rel_tol);
        py::list rows;
        for (const auto& rep : summary.reports) {
          py::dict row;
          row["quantity_id"] = rep.quantity_id;
          row["closed_form"] = rep.closed_form_value;
          row["oracle"] = rep.oracle_value;
          row["abs_error"] = rep.abs_error_estimate;
          row["pass"] = rep.pass;
          rows.append(row);
        }
        py::dict out;
        out["all_pass"] = summary.all_pass;
        out["seconds"] = summary.seconds;
        out["rows"] = rows;
        return out;
      },
      py::arg("grid") = "smoke", py::arg("rel_tol") = 1e-3,
      "Closed-form-vs-quadrature verification grid.");
}
