// Copyright 2026 The itz Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "itz/config.hpp"
#include "itz/error.hpp"
#include "itz/manybody.hpp"
#include "itz/partition.hpp"
#include "itz/run.hpp"
#include "itz/sff.hpp"
#include "itz/spectra.hpp"
#include "itz/zeros.hpp"

namespace py = pybind11;
using namespace itz;

PYBIND11_MODULE(_core, m) {
  m.doc() = "itz core bindings";

  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);

  py::enum_<Family>(m, "Family")
      .value("TFI_OBC", Family::TfiObc)
      .value("TFI_PBC", Family::TfiPbc)
      .value("XX_OBC", Family::XxObc)
      .value("POTTS3", Family::Potts3)
      .value("POTTS4", Family::Potts4);

  py::class_<ModelSpec>(m, "ModelSpec")
      .def(py::init([](Family f, int n, double lambda, double h) {
             ModelSpec s{f, n, lambda, h};
             s.validate();
             return s;
           }),
           py::arg("family"), py::arg("n"), py::arg("lam"), py::arg("h") = 0.0)
      .def_readonly("family", &ModelSpec::family)
      .def_readonly("n", &ModelSpec::n)
      .def_readonly("lam", &ModelSpec::lambda)
      .def_readonly("h", &ModelSpec::probe_h)
      .def("__repr__", [](const ModelSpec& s) { return "ModelSpec(" + model_key(s) + ")"; });

  m.def(
      "quasiparticle_spectrum",
      [](const ModelSpec& model) {
        py::list out;
        for (const auto& mode : quasiparticle_spectrum(model).modes)
          out.append(py::make_tuple(mode.q, mode.epsilon, mode.kind == ModeKind::RealBulk ? "REAL_BULK" : "COMPLEX_PI"));
        return out;
      },
      "List of (q, epsilon, kind) for a TFI OBC or XX chain.");
  m.def(
      "exact_spectrum", [](const ModelSpec& model) { return exact_spectrum(model).energies; },
      "Sorted many-body energies from exact diagonalization.");
  m.def(
      "free_fermion_manybody",
      [](const ModelSpec& model) {
        if (model.family == Family::TfiPbc)
          return free_fermion_manybody_pbc(pbc_momenta(model, Channel::Odd), pbc_momenta(model, Channel::Even)).energies;
        return free_fermion_manybody(quasiparticle_spectrum(model)).energies;
      },
      "Sorted many-body energies from quasiparticle enumeration.");
  m.def(
      "enumerate_itzs",
      [](const ModelSpec& model, int m_max) {
        py::dict out;
        for (const auto& s : enumerate_itzs(quasiparticle_spectrum(model), m_max)) out[py::int_(s.m)] = s.zeros;
        return out;
      },
      py::arg("model"), py::arg("m_max") = 1, "Sector m -> ascending positive zeros.");
  m.def(
      "sector_edges",
      [](double lambda, int m) {
        const auto e = sector_edges(lambda, m);
        return py::make_tuple(e.t_minus, e.t_plus);
      },
      py::arg("lam"), py::arg("m") = 1);
  m.def("density_analytic", &density_analytic, py::arg("t"), py::arg("lam"), py::arg("m"), py::arg("n"));
  m.def("density_xx", &density_xx, py::arg("t"), py::arg("lam"), py::arg("m"));
  m.def(
      "z_trace",
      [](const std::vector<double>& energies, std::complex<double> tau) {
        ManyBodySpectrum s;
        s.energies = energies;
        s.dim = energies.size();
        return z_trace(s, ComplexTemperature::from(tau));
      },
      py::arg("energies"), py::arg("tau"));
  m.def(
      "z_product_obc", [](const ModelSpec& model, double t) { return z_product_obc(quasiparticle_spectrum(model), t); },
      py::arg("model"), py::arg("t"));
  m.def(
      "sff",
      [](const std::vector<double>& energies, const std::vector<double>& times) {
        ManyBodySpectrum s;
        s.energies = energies;
        s.dim = energies.size();
        const auto tr = sff(s, times, true);
        return py::make_tuple(tr.k, tr.zeros_t);
      },
      py::arg("energies"), py::arg("times"), "Returns (K on the grid, refined zeros of K).");
  m.def(
      "run",
      [](const std::string& config_json) {
        const auto j = merge_json(default_config_json(), nlohmann::json::parse(config_json));
        std::vector<std::string> files;
        for (const auto& f : run(config_from_json(j)).files) files.push_back(f.string());
        return files;
      },
      py::arg("config_json"), "Runs one CLI command from a JSON config; returns artifact paths.");
}
