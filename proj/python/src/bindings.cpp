#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <limits>

#include "plapclaw/experiment.hpp"
#include "plapclaw/oracles.hpp"
#include "plapclaw/properties.hpp"

namespace py = pybind11;
using namespace plapclaw;

namespace {

py::dict simulate_text(const std::string& config_text,
                       const std::optional<std::string>& out_dir) {
  const ExperimentConfig cfg = parse_config_text(config_text);
  const ExperimentResult result = run_experiment(cfg);
  if (out_dir) write_outputs(cfg, result, *out_dir);

  py::dict out;
  out["columns"] = result.columns;
  out["rows"] = result.rows;
  out["steps"] = result.trajectory.steps.size();
  out["max_principle_slack"] = result.trajectory.max_principle_slack;
  out["mass_rel_drift"] = result.trajectory.mass_rel_drift;
  py::list fits;
  for (const auto& fr : result.fits) {
    py::dict d;
    d["column"] = fr.column;
    d["q"] = fr.q;
    d["gradient"] = fr.gradient;
    d["exponent"] = fr.fit.exponent;
    d["r_squared"] = fr.fit.r_squared;
    if (fr.has_reference) {
      d["reference_exponent"] = fr.fit.reference_exponent;
      d["pass"] = fr.fit.pass;
    }
    fits.append(d);
  }
  out["fits"] = fits;
  return out;
}

}  // namespace

PYBIND11_MODULE(_plapclaw, m) {
  m.doc() = "Finite-volume simulator for conservation laws with degenerate "
            "p-Laplacian viscosity, with exact-wave oracles and decay-rate fits";

  m.def("signed_pow", &signed_pow, py::arg("a"), py::arg("p"));
  m.def("identity_45_residual", &identity_45_residual, py::arg("a"),
        py::arg("b"), py::arg("p"));

  py::class_<FluxModel>(m, "FluxModel")
      .def_static("burgers", &FluxModel::burgers, py::arg("u_lo") = -50.0,
                  py::arg("u_hi") = 50.0)
      .def_static("poly_convex", &FluxModel::poly_convex, py::arg("coeffs"),
                  py::arg("u_lo"), py::arg("u_hi"))
      .def("f", &FluxModel::f)
      .def("lam", &FluxModel::lambda)
      .def("lam_prime", &FluxModel::lambda_prime)
      .def("lam_inverse", &FluxModel::lambda_inverse)
      .def_property_readonly("u_lo", &FluxModel::u_lo)
      .def_property_readonly("u_hi", &FluxModel::u_hi);

  py::class_<Grid>(m, "Grid")
      .def(py::init<double, double, int>(), py::arg("x_min"), py::arg("x_max"),
           py::arg("n_cells"))
      .def_readonly("x_min", &Grid::x_min)
      .def_readonly("x_max", &Grid::x_max)
      .def_readonly("n_cells", &Grid::n_cells)
      .def_property_readonly("dx", &Grid::dx)
      .def("center", &Grid::center);

  py::class_<Field>(m, "Field")
      .def(py::init<Grid, std::vector<double>>(), py::arg("grid"), py::arg("values"))
      .def_readonly("grid", &Field::grid)
      .def_readonly("values", &Field::values);

  py::class_<FarField>(m, "FarField")
      .def(py::init<double, double>(), py::arg("u_minus"), py::arg("u_plus"))
      .def_readonly("u_minus", &FarField::u_minus)
      .def_readonly("u_plus", &FarField::u_plus);

  py::class_<WaveState>(m, "WaveState")
      .def(py::init<FluxModel, FarField>(), py::arg("flux"), py::arg("far_field"))
      .def_readonly("lambda_minus", &WaveState::lambda_minus)
      .def_readonly("lambda_plus", &WaveState::lambda_plus);

  m.def("burgers_rarefaction", &burgers_rarefaction, py::arg("xi"),
        py::arg("w_minus"), py::arg("w_plus"));
  m.def(
      "smoothed_burgers",
      [](double t, double x, double wm, double wp) {
        const auto root = smoothed_burgers(t, x, wm, wp);
        return py::make_tuple(root.w, root.x0);
      },
      py::arg("t"), py::arg("x"), py::arg("w_minus"), py::arg("w_plus"));
  m.def("exact_rarefaction", &exact_rarefaction, py::arg("xi"), py::arg("ws"));
  m.def("smoothed_rarefaction", &smoothed_rarefaction, py::arg("t"), py::arg("x"),
        py::arg("ws"));

  py::enum_<WaveKind>(m, "WaveKind")
      .value("Exact", WaveKind::Exact)
      .value("Smoothed", WaveKind::Smoothed);
  m.def("sample_wave", &sample_wave, py::arg("grid"), py::arg("t"), py::arg("ws"),
        py::arg("which"));

  py::class_<BarenblattParams>(m, "BarenblattParams")
      .def(py::init<double, double, double>(), py::arg("p"), py::arg("C"),
           py::arg("mu") = 1.0)
      .def_readonly("p", &BarenblattParams::p)
      .def_readonly("C", &BarenblattParams::C)
      .def_readonly("mu", &BarenblattParams::mu)
      .def_property_readonly("alpha", &BarenblattParams::alpha)
      .def_property_readonly("xi_max", &BarenblattParams::xi_max);
  m.def("barenblatt", &barenblatt, py::arg("t"), py::arg("x"), py::arg("params"));
  m.def("barenblatt_gradient", &barenblatt_gradient, py::arg("t"), py::arg("x"),
        py::arg("params"));
  m.def("barenblatt_residual", &barenblatt_residual, py::arg("params"),
        py::arg("n_samples") = 3000);
  m.def("barenblatt_field", &barenblatt_field, py::arg("grid"), py::arg("t"),
        py::arg("params"));

  m.def("lq_norm", &lq_norm, py::arg("field"), py::arg("q"));
  m.def("discrete_gradient", &discrete_gradient, py::arg("field"));
  m.def("deviation_from_constant", &deviation_from_constant, py::arg("u"),
        py::arg("value"));
  m.def(
      "interpolation_check",
      [](const Field& phi, double p, double q) {
        const auto c = interpolation_check(phi, p, q);
        return py::make_tuple(c.lhs, c.rhs, c.ratio);
      },
      py::arg("phi"), py::arg("p"), py::arg("q"));

  py::class_<DecayFit>(m, "DecayFit")
      .def_readonly("exponent", &DecayFit::exponent)
      .def_readonly("intercept", &DecayFit::intercept)
      .def_readonly("r_squared", &DecayFit::r_squared)
      .def_readonly("reference_exponent", &DecayFit::reference_exponent)
      .def_readonly("pass_", &DecayFit::pass);
  m.def("decay_fit", &decay_fit, py::arg("times"), py::arg("values"),
        py::arg("reference_exponent"), py::arg("window_lo"), py::arg("window_hi"),
        py::arg("tolerance"));

  m.def("reference_exponent_lq",
        [](const std::string& name, double p, double q) {
          return reference_exponent_lq(parse_rate_set(name), p, q);
        });
  m.def("reference_exponent_gradient",
        [](const std::string& name, double p, double r_plus_1) {
          return reference_exponent_gradient(parse_rate_set(name), p, r_plus_1);
        });

  m.def("simulate", &simulate_text, py::arg("config_text"),
        py::arg("out_dir") = std::nullopt,
        "Run an experiment from config text; returns columns, rows and fits.");

  m.attr("inf") = std::numeric_limits<double>::infinity();
#ifdef PLAPCLAW_VERSION
  m.attr("__version__") = PLAPCLAW_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
