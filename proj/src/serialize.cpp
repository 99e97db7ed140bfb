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

#include "schmidt/serialize.hpp"

#include <string>

#include "schmidt/errors.hpp"

namespace schmidt {

nlohmann::json circuit_to_json(const Circuit& c) {
  nlohmann::json gates = nlohmann::json::array();
  for (const auto& g : c.gates()) {
    nlohmann::json jg;
    jg["kind"] = kind_name(g);
    jg["qubits"] = qubits_of(g);
    if (const auto* r = std::get_if<Rot>(&g)) jg["theta"] = r->theta;
    if (const auto* o = std::get_if<Opaque>(&g)) {
      nlohmann::json rows = nlohmann::json::array();
      for (std::size_t i = 0; i < o->matrix.rows(); ++i) {
        auto row = o->matrix.row(i);
        rows.push_back(std::vector<double>(row.begin(), row.end()));
      }
      jg["matrix"] = std::move(rows);
    }
    gates.push_back(std::move(jg));
  }
  return {{"width", c.width()}, {"gates", std::move(gates)}};
}

Circuit circuit_from_json(const nlohmann::json& j) {
  try {
    Circuit c(j.at("width").get<std::size_t>());
    for (const auto& jg : j.at("gates")) {
      const auto kind = jg.at("kind").get<std::string>();
      const auto qs = jg.at("qubits").get<std::vector<Qubit>>();
      auto need = [&](std::size_t n) {
        if (qs.size() != n) throw InvalidInput(kind + " expects " + std::to_string(n) + " qubits");
      };
      if (kind == "ROT") {
        need(1);
        c.push(Rot{jg.at("theta").get<double>(), qs[0]});
      } else if (kind == "X") {
        need(1);
        c.push(PauliX{qs[0]});
      } else if (kind == "CNOT") {
        need(2);
        c.push(Cnot{qs[0], qs[1]});
      } else if (kind == "SWAP") {
        need(2);
        c.push(Swap{qs[0], qs[1]});
      } else if (kind == "OPAQUE") {
        const auto rows = jg.at("matrix").get<std::vector<std::vector<double>>>();
        std::vector<double> flat;
        for (const auto& r : rows) {
          if (r.size() != rows.size()) throw InvalidInput("OPAQUE matrix is not square");
          flat.insert(flat.end(), r.begin(), r.end());
        }
        c.push(Opaque{qs, RealMatrix(rows.size(), rows.size(), std::move(flat))});
      } else {
        throw InvalidInput("unknown gate kind '" + kind + "'");
      }
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed circuit JSON: ") + e.what());
  }
}

nlohmann::json counts_to_json(const GateCounts& n) {
  nlohmann::json j{{"rot", n.rot},       {"x", n.x},
                   {"cnot", n.cnot},     {"swap", n.swap},
                   {"opaque", n.opaque}, {"two_qubit_raw", n.two_qubit_raw}};
  j["two_qubit_lowered"] =
      n.two_qubit_lowered ? nlohmann::json(*n.two_qubit_lowered) : nlohmann::json(nullptr);
  return j;
}

}  // namespace schmidt
