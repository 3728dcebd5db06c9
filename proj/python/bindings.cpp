#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rabi/cli.hpp"
#include "rabi/errors.hpp"
#include "rabi/feasibility.hpp"
#include "rabi/potential.hpp"
#include "rabi/spectra.hpp"
#include "rabi/variational.hpp"

namespace py = pybind11;
using namespace rabi;

namespace {

py::dict spectrum(double omega_q, double coupling, int levels, double tol) {
  const SpectralResult r = converged_spectrum({omega_q, coupling}, levels, tol);
  std::vector<double> e(r.eigenvalues.data(), r.eigenvalues.data() + levels);
  std::vector<int> p(r.parities.begin(), r.parities.begin() + levels);
  py::dict d;
  d["energies"] = e;
  d["parities"] = p;
  d["n_max"] = r.basis.n_max;
  return d;
}

py::dict report(const std::string& preset) {
  const DeviceScenario& s = device_preset(preset);
  const FeasibilityReport f = feasibility_report(s.model, s.context);
  py::dict d;
  d["t_Q"] = f.t_q;
  d["gamma_th"] = f.gamma_th;
  d["T_c"] = f.t_c;
  d["delta_V"] = f.delta_v;
  d["tau_th"] = f.tau_th ? py::cast(*f.tau_th) : py::none();
  d["quantum_dominated"] = f.quantum_dominated;
  return d;
}

int run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"rabi"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return cli::run(static_cast<int>(argv.size()), argv.data());
}

}  // namespace

PYBIND11_MODULE(_rabi, m) {
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<RegimeError>(m, "RegimeError", PyExc_ValueError);
  py::register_exception<NumericError>(m, "NumericError", PyExc_RuntimeError);

  py::class_<VariationalSolution>(m, "VariationalSolution")
      .def_readonly("epsilon", &VariationalSolution::epsilon)
      .def_readonly("theta0", &VariationalSolution::theta0)
      .def_readonly("alpha0", &VariationalSolution::alpha0);

  py::class_<BarrierStats>(m, "BarrierStats")
      .def_readonly("minima_location", &BarrierStats::minima_location)
      .def_readonly("minimum_value", &BarrierStats::minimum_value)
      .def_readonly("barrier_value", &BarrierStats::barrier_value)
      .def_readonly("barrier_height", &BarrierStats::barrier_height);

  py::class_<DoubletCounts>(m, "DoubletCounts")
      .def_readonly("energy_bound", &DoubletCounts::energy_bound)
      .def_readonly("overlap_count", &DoubletCounts::overlap_count)
      .def_readonly("large_n_bound", &DoubletCounts::large_n_bound);

  m.def("variational_params", [](double w, double l) { return variational_params({w, l}); }, py::arg("omega_q"),
        py::arg("coupling"));
  m.def(
      "doublet_energies",
      [](double w, double l, int n, bool simplified) {
        const DoubletEnergies e = doublet_energies({w, l}, n, simplified);
        return py::make_tuple(e.minus, e.plus);
      },
      py::arg("omega_q"), py::arg("coupling"), py::arg("n"), py::arg("simplified") = false,
      "(E_minus, E_plus) of the N-th parity doublet.");
  m.def("tunneling_splitting", [](double w, double l) { return tunneling_splitting({w, l}); }, py::arg("omega_q"),
        py::arg("coupling"));
  m.def("spectrum", &spectrum, py::arg("omega_q"), py::arg("coupling"), py::arg("levels") = 20,
        py::arg("tol") = 1e-9, "Converged exact levels with parities.");
  m.def("lower_band_at", [](double w, double l, double q) { return lower_band_at({w, l}, q); }, py::arg("omega_q"),
        py::arg("coupling"), py::arg("q"));
  m.def("barrier_stats", [](double w, double l) { return barrier_stats({w, l}); }, py::arg("omega_q"),
        py::arg("coupling"));
  m.def("doublet_counts", [](double w, double l) { return doublet_counts({w, l}); }, py::arg("omega_q"),
        py::arg("coupling"));
  m.def("feasibility", &report, py::arg("preset"));
  m.def("run_cli", &run_cli, py::arg("args"), "Run the command-line tool in-process; returns the exit code.");
}
