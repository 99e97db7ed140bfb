// Copyright 2026 The schmidt-encoder Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <variant>
#include <vector>

#include "schmidt/circuit.hpp"
#include "schmidt/encoder.hpp"
#include "schmidt/errors.hpp"
#include "schmidt/numerics.hpp"
#include "schmidt/serialize.hpp"
#include "schmidt/simulator.hpp"
#include "schmidt/synth.hpp"

namespace py = pybind11;
using namespace schmidt;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

SynthMode synth_from(const std::string& s) {
  if (s == "exact") return SynthMode::kExact;
  if (s == "opaque") return SynthMode::kOpaque;
  throw InvalidInput("synth must be 'exact' or 'opaque', got '" + s + "'");
}

RealMatrix matrix_from(const Array& a) {
  if (a.ndim() != 2) throw InvalidInput("expected a 2-D array");
  const auto rows = static_cast<std::size_t>(a.shape(0));
  const auto cols = static_cast<std::size_t>(a.shape(1));
  return RealMatrix(rows, cols, std::vector<double>(a.data(), a.data() + rows * cols));
}

Array array_from(const RealMatrix& m) {
  Array out({m.rows(), m.cols()});
  std::copy(m.data().begin(), m.data().end(), out.mutable_data());
  return out;
}

py::dict counts_dict(const GateCounts& c) {
  py::dict d;
  d["rot"] = c.rot;
  d["x"] = c.x;
  d["cnot"] = c.cnot;
  d["swap"] = c.swap;
  d["opaque"] = c.opaque;
  d["two_qubit_raw"] = c.two_qubit_raw;
  d["two_qubit_lowered"] = c.two_qubit_lowered ? py::cast(*c.two_qubit_lowered) : py::none();
  return d;
}

py::tuple gate_tuple(const Gate& g) {
  const auto qs = qubits_of(g);
  if (const auto* r = std::get_if<Rot>(&g)) return py::make_tuple("ROT", qs, r->theta);
  if (const auto* o = std::get_if<Opaque>(&g)) return py::make_tuple("OPAQUE", qs, array_from(o->matrix));
  return py::make_tuple(std::string(kind_name(g)), qs);
}

py::dict result_dict(const EncodeResult& r) {
  py::dict d;
  d["circuit"] = r.circuit;
  d["encoder"] = std::string(to_string(r.report.kind));
  d["synth"] = std::string(to_string(r.report.synth));
  d["fidelity"] = r.report.fidelity ? py::cast(*r.report.fidelity) : py::none();
  d["counts"] = counts_dict(r.report.counts);
  py::list levels;
  for (const auto& l : r.report.schmidt_levels) {
    py::dict e;
    e["depth"] = l.depth;
    e["first_qubit"] = l.first_qubit;
    e["qubits"] = l.qubits;
    e["rank"] = l.rank;
    levels.append(e);
  }
  d["schmidt_ranks"] = levels;
  py::list paths;
  for (const auto& s : r.report.synthesis) {
    py::dict e;
    e["depth"] = s.depth;
    e["register"] = s.register_name;
    e["qubits"] = s.qubits;
    e["path"] = std::string(to_string(s.path));
    paths.append(e);
  }
  d["synthesis_paths"] = paths;
  return d;
}

EncodeOptions options(const std::string& synth, double rank_tol, bool verify) {
  EncodeOptions o;
  o.synth = synth_from(synth);
  o.rank_tol = rank_tol;
  o.verify = verify;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Amplitude-encoding circuit compiler based on the Schmidt decomposition";

  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<SynthesisError>(m, "SynthesisError", PyExc_RuntimeError);
  py::register_exception<EmissionError>(m, "EmissionError", PyExc_RuntimeError);

  py::class_<Circuit>(m, "Circuit")
      .def_property_readonly("width", &Circuit::width)
      .def_property_readonly("gates",
                             [](const Circuit& c) {
                               py::list out;
                               for (const auto& g : c.gates()) out.append(gate_tuple(g));
                               return out;
                             })
      .def("__len__", &Circuit::size)
      .def("counts", [](const Circuit& c) { return counts_dict(count_gates(c)); })
      .def("lower", &lower)
      .def("to_json", [](const Circuit& c) { return circuit_to_json(c).dump(); })
      .def_static("from_json",
                  [](const std::string& text) {
                    nlohmann::json j;
                    try {
                      j = nlohmann::json::parse(text);
                    } catch (const nlohmann::json::parse_error& e) {
                      throw InvalidInput(std::string("invalid JSON: ") + e.what());
                    }
                    return circuit_from_json(j);
                  })
      .def("__eq__", [](const Circuit& a, const Circuit& b) { return a == b; })
      .def("__repr__", [](const Circuit& c) {
        return "<Circuit width=" + std::to_string(c.width()) + " gates=" +
               std::to_string(c.size()) + ">";
      });

  m.def(
      "normalize",
      [](const std::vector<double>& values) {
        const DataVector d = normalize(values);
        return py::make_tuple(std::vector<double>(d.values().begin(), d.values().end()),
                              d.input_norm());
      },
      py::arg("values"), "Return (unit vector, input norm).");

  m.def(
      "schmidt_split",
      [](const std::vector<double>& values, double rank_tol) {
        const SchmidtSplit s = schmidt_split(normalize(values), rank_tol);
        py::dict d;
        d["left_qubits"] = s.left_qubits;
        d["right_qubits"] = s.right_qubits;
        d["lambda"] = s.lambda;
        d["rank"] = s.rank;
        d["u"] = array_from(s.svd.u);
        d["v"] = array_from(s.svd.v);
        return d;
      },
      py::arg("values"), py::arg("rank_tol") = kDefaultRankTolerance);

  m.def(
      "encode_schmidt",
      [](const std::vector<double>& values, const std::string& synth, double rank_tol,
         bool verify) {
        return result_dict(encode_schmidt(normalize(values), options(synth, rank_tol, verify)));
      },
      py::arg("values"), py::arg("synth") = "exact", py::arg("rank_tol") = kDefaultRankTolerance,
      py::arg("verify") = true);

  m.def(
      "encode_naive",
      [](const std::vector<double>& values, bool verify) {
        return result_dict(encode_naive(normalize(values), options("exact", kDefaultRankTolerance, verify)));
      },
      py::arg("values"), py::arg("verify") = true);

  m.def(
      "simulate",
      [](const Circuit& c) {
        const StateVector s = run(c);
        py::array_t<std::complex<double>> out(static_cast<py::ssize_t>(s.dim()));
        std::copy(s.amplitudes().begin(), s.amplitudes().end(), out.mutable_data());
        return out;
      },
      py::arg("circuit"), "Run the circuit on |0...0> and return the amplitudes.");

  m.def("emit_qasm", &emit_qasm, py::arg("circuit"));

  m.def(
      "svd",
      [](const Array& a) {
        const SvdResult r = svd(matrix_from(a));
        return py::make_tuple(array_from(r.u), r.sigma, array_from(r.v));
      },
      py::arg("a"), "Return (u, sigma, v) with a = u diag(sigma) v^T.");
}
