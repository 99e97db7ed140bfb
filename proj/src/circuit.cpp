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

#include "schmidt/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>

#include "schmidt/errors.hpp"

namespace schmidt {

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

}  // namespace

std::vector<Qubit> qubits_of(const Gate& g) {
  return std::visit(Overloaded{
                        [](const Rot& r) { return std::vector<Qubit>{r.target}; },
                        [](const PauliX& x) { return std::vector<Qubit>{x.target}; },
                        [](const Cnot& c) { return std::vector<Qubit>{c.control, c.target}; },
                        [](const Swap& s) { return std::vector<Qubit>{s.a, s.b}; },
                        [](const Opaque& o) { return o.targets; },
                    },
                    g);
}

std::string_view kind_name(const Gate& g) {
  return std::visit(Overloaded{
                        [](const Rot&) { return std::string_view{"ROT"}; },
                        [](const PauliX&) { return std::string_view{"X"}; },
                        [](const Cnot&) { return std::string_view{"CNOT"}; },
                        [](const Swap&) { return std::string_view{"SWAP"}; },
                        [](const Opaque&) { return std::string_view{"OPAQUE"}; },
                    },
                    g);
}

RealMatrix rot_matrix(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return RealMatrix{{c, -s}, {s, c}};
}

void validate_gate(const Gate& g, std::size_t width) {
  const auto qs = qubits_of(g);
  if (qs.empty()) throw InvalidInput(std::string(kind_name(g)) + " gate has no qubits");
  for (std::size_t i = 0; i < qs.size(); ++i) {
    if (qs[i] >= width) {
      throw InvalidInput(std::string(kind_name(g)) + " touches qubit " + std::to_string(qs[i]) +
                         " but the circuit has width " + std::to_string(width));
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (qs[i] == qs[j]) {
        throw InvalidInput(std::string(kind_name(g)) + " repeats qubit " + std::to_string(qs[i]));
      }
    }
  }
  if (const auto* r = std::get_if<Rot>(&g); r && !std::isfinite(r->theta)) {
    throw InvalidInput("ROT angle is not finite");
  }
  if (const auto* o = std::get_if<Opaque>(&g)) {
    const std::size_t dim = std::size_t{1} << o->targets.size();
    if (o->matrix.rows() != dim || o->matrix.cols() != dim) {
      throw InvalidInput("OPAQUE on " + std::to_string(o->targets.size()) +
                         " qubits needs a " + std::to_string(dim) + "x" + std::to_string(dim) +
                         " matrix");
    }
    if (orthogonality_defect(o->matrix) > kOrthogonalityTolerance) {
      throw InvalidInput("OPAQUE matrix is not orthogonal");
    }
  }
}

Circuit::Circuit(std::size_t width) : width_(width) {
  if (width == 0) throw InvalidInput("circuit width must be at least 1");
}

void Circuit::push(Gate g) {
  validate_gate(g, width_);
  gates_.push_back(std::move(g));
}

void Circuit::extend(std::span<const Gate> gs) {
  for (const auto& g : gs) push(g);
}

Circuit Circuit::prefix(std::size_t n) const {
  Circuit out(width_);
  out.gates_.assign(gates_.begin(), gates_.begin() + std::min(n, gates_.size()));
  return out;
}

Circuit append(const Circuit& c, Gate g) {
  Circuit out = c;
  out.push(std::move(g));
  return out;
}

Circuit lower(const Circuit& c) {
  Circuit out(c.width());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Gate& g = c.gates()[i];
    if (std::holds_alternative<Opaque>(g)) {
      throw SynthesisError("gate " + std::to_string(i) + " is OPAQUE and cannot be lowered");
    }
    if (const auto* s = std::get_if<Swap>(&g)) {
      out.push(Cnot{s->a, s->b});
      out.push(Cnot{s->b, s->a});
      out.push(Cnot{s->a, s->b});
    } else {
      out.push(g);
    }
  }
  return out;
}

GateCounts count_gates(const Circuit& c) {
  GateCounts n;
  bool lowerable = true;
  for (const auto& g : c.gates()) {
    std::visit(Overloaded{
                   [&](const Rot&) { ++n.rot; },
                   [&](const PauliX&) { ++n.x; },
                   [&](const Cnot&) { ++n.cnot; },
                   [&](const Swap&) { ++n.swap; },
                   [&](const Opaque& o) {
                     ++n.opaque;
                     lowerable = false;
                     if (o.targets.size() >= 2) ++n.two_qubit_raw;
                   },
               },
               g);
  }
  n.two_qubit_raw += n.cnot + n.swap;
  if (lowerable) n.two_qubit_lowered = n.cnot + 3 * n.swap;
  return n;
}

std::string emit_qasm(const Circuit& c) {
  Circuit lowered(c.width());
  try {
    lowered = lower(c);
  } catch (const SynthesisError& e) {
    throw EmissionError(std::string("cannot emit QASM: ") + e.what());
  }
  std::ostringstream out;
  out << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  out << "qreg q[" << c.width() << "];\n";
  char angle[64];
  for (const auto& g : lowered.gates()) {
    if (const auto* r = std::get_if<Rot>(&g)) {
      std::snprintf(angle, sizeof angle, "%.17g", 2.0 * r->theta);
      out << "ry(" << angle << ") q[" << r->target << "];\n";
    } else if (const auto* x = std::get_if<PauliX>(&g)) {
      out << "x q[" << x->target << "];\n";
    } else if (const auto* cx = std::get_if<Cnot>(&g)) {
      out << "cx q[" << cx->control << "],q[" << cx->target << "];\n";
    }
  }
  return out.str();
}

}  // namespace schmidt
