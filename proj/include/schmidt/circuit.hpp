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

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "schmidt/numerics.hpp"

namespace schmidt {

using Qubit = std::size_t;

// Gate set. Qubit 0 is the most significant bit of a basis-state index.

/// Real rotation [[cos t, -sin t], [sin t, cos t]]; equals ry(2t).
struct Rot {
  double theta;
  Qubit target;
  friend bool operator==(const Rot&, const Rot&) = default;
};

struct PauliX {
  Qubit target;
  friend bool operator==(const PauliX&, const PauliX&) = default;
};

struct Cnot {
  Qubit control;
  Qubit target;
  friend bool operator==(const Cnot&, const Cnot&) = default;
};

struct Swap {
  Qubit a;
  Qubit b;
  friend bool operator==(const Swap&, const Swap&) = default;
};

/// Arbitrary orthogonal matrix on `targets`; targets[0] is the most
/// significant bit of the matrix index.
struct Opaque {
  std::vector<Qubit> targets;
  RealMatrix matrix;
  friend bool operator==(const Opaque&, const Opaque&) = default;
};

using Gate = std::variant<Rot, PauliX, Cnot, Swap, Opaque>;

std::vector<Qubit> qubits_of(const Gate& g);
std::string_view kind_name(const Gate& g);

/// 2x2 matrix of Rot{theta}.
RealMatrix rot_matrix(double theta);

inline constexpr double kOrthogonalityTolerance = 1e-10;

/// Throws InvalidInput if the gate touches a qubit >= width, repeats a
/// qubit, or is an Opaque gate whose matrix is mis-sized or not orthogonal.
void validate_gate(const Gate& g, std::size_t width);

class Circuit {
 public:
  explicit Circuit(std::size_t width);

  std::size_t width() const noexcept { return width_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  std::size_t size() const noexcept { return gates_.size(); }
  bool empty() const noexcept { return gates_.empty(); }

  /// In-place append; validates the gate against the width.
  void push(Gate g);
  void extend(std::span<const Gate> gs);

  /// The first n gates.
  Circuit prefix(std::size_t n) const;

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  std::size_t width_;
  std::vector<Gate> gates_;
};

/// Value-semantics append: returns a copy of c with g at the end.
Circuit append(const Circuit& c, Gate g);

/// Rewrites every SWAP(a,b) as CNOT(a,b) CNOT(b,a) CNOT(a,b).
/// Throws SynthesisError naming the first Opaque gate's position.
Circuit lower(const Circuit& c);

struct GateCounts {
  std::size_t rot = 0;
  std::size_t x = 0;
  std::size_t cnot = 0;
  std::size_t swap = 0;
  std::size_t opaque = 0;
  /// CNOT + SWAP + Opaque gates on two or more qubits.
  std::size_t two_qubit_raw = 0;
  /// CNOT count after lower(); empty when an Opaque gate blocks lowering.
  std::optional<std::size_t> two_qubit_lowered;

  std::size_t total() const noexcept { return rot + x + cnot + swap + opaque; }
  friend bool operator==(const GateCounts&, const GateCounts&) = default;
};

GateCounts count_gates(const Circuit& c);

/// OpenQASM 2.0 text using only ry / x / cx. SWAPs are lowered on the way
/// out; Rot{t} is written as ry(2t) with 17 significant digits.
/// Throws EmissionError if the circuit holds an Opaque gate.
std::string emit_qasm(const Circuit& c);

}  // namespace schmidt
