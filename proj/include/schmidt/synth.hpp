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
#include <string_view>
#include <vector>

#include "schmidt/circuit.hpp"
#include "schmidt/numerics.hpp"

namespace schmidt {

enum class SynthMode { kExact, kOpaque };

enum class SynthPath { kAffinePermutation, kKroneckerProduct, kGivensFallback, kOpaque };

std::string_view to_string(SynthPath p);
std::string_view to_string(SynthMode m);

struct SynthesisOutcome {
  std::vector<Gate> gates;  // on the caller's target qubits
  SynthPath path;
  /// Max entrywise deviation of the gates' composed matrix from the target.
  double residual = 0.0;
};

inline constexpr double kRecognizerTolerance = 1e-10;
inline constexpr double kSynthesisResidualLimit = 1e-9;

/// Gates realizing the orthogonal matrix m on `targets` (targets[0] is the
/// most significant bit of m's index).
///
/// Exact mode tries, in order: affine permutation, Kronecker product of 2x2
/// factors (also after permuting the input qubits), then two-level Givens
/// rotations. Opaque mode returns one Opaque gate.
///
/// The result is verified by simulating every basis state; a residual above
/// 1e-9 is a SynthesisError. Also throws InvalidInput for a non-orthogonal
/// or wrongly sized m, and SynthesisError for a determinant -1 matrix on
/// three or more qubits (no ROT/X/CNOT/SWAP circuit on that many qubits has
/// odd parity).
SynthesisOutcome synthesize_orthogonal(const RealMatrix& m, std::span<const Qubit> targets,
                                       SynthMode mode = SynthMode::kExact);

/// If m is a 0/1 permutation matrix whose index map is x -> Ax xor b over
/// GF(2), returns X gates for A^-1 b followed by SWAP/CNOT gates for A, on
/// local qubits 0..k-1. Otherwise nothing.
std::optional<std::vector<Gate>> recognize_affine_permutation(const RealMatrix& m);

/// If m is (within 1e-10) a Kronecker product of k 2x2 orthogonal factors,
/// returns one ROT per rotation factor and X-then-ROT per reflection factor,
/// on local qubits 0..k-1 (identity factors emit nothing).
std::optional<std::vector<Gate>> recognize_kronecker_rotations(const RealMatrix& m);

/// Two-level rotation acting as Rot{theta} on the ordered pair (|i>, |j>):
/// |i> -> cos|i> + sin|j>,  |j> -> -sin|i> + cos|j>.
struct TwoLevelRotation {
  std::size_t i;
  std::size_t j;
  double theta;
  friend bool operator==(const TwoLevelRotation&, const TwoLevelRotation&) = default;
};

RealMatrix two_level_matrix(const TwoLevelRotation& g, std::size_t dim);

/// Factors m into two-level rotations, listed in application order (the
/// first element acts first). Negative pivots are absorbed as extra
/// rotations by pi. Throws InvalidInput for non-orthogonal m and
/// SynthesisError when det(m) = -1.
std::vector<TwoLevelRotation> givens_decompose(const RealMatrix& m);

/// Gates for a two-level rotation between basis states i and j of the
/// register `targets`: CNOTs steer i and j onto a single differing qubit,
/// X gates select the control pattern, and a multi-controlled ROT is
/// expanded recursively into ROTs and CNOTs.
std::vector<Gate> two_level_to_gates(std::size_t i, std::size_t j, double theta,
                                     std::span<const Qubit> targets);

/// ROT on `target` conditioned on `controls` (all must be |1>), expanded
/// into 2^m ROTs and 2^(m+1) - 2 CNOTs.
std::vector<Gate> controlled_rot(double theta, std::span<const Qubit> controls, Qubit target);

/// Uniformly controlled rotation: for control basis state b (controls[0] is
/// the most significant bit) the target sees Rot{angles[b]}. Emits exactly
/// 2^m ROT and 2^m CNOT gates, m = controls.size() >= 1, in Gray-code order.
std::vector<Gate> multiplexed_rot(std::span<const double> angles, std::span<const Qubit> controls,
                                  Qubit target);

}  // namespace schmidt
