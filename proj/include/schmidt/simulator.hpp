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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "schmidt/circuit.hpp"

namespace schmidt {

inline constexpr std::size_t kMaxSimulatedQubits = 24;

using Amplitude = std::complex<double>;

/// Dense statevector, big-endian like Circuit: qubit 0 is the most
/// significant bit of the amplitude index.
class StateVector {
 public:
  /// |0...0> on `width` qubits; 1 <= width <= 24.
  static StateVector zero_state(std::size_t width);
  /// Takes the amplitudes as given (length must be a power of two >= 2).
  static StateVector from_amplitudes(std::vector<Amplitude> amps);
  static StateVector from_real(std::span<const double> values);

  std::size_t width() const noexcept { return width_; }
  std::size_t dim() const noexcept { return amps_.size(); }
  std::span<const Amplitude> amplitudes() const noexcept { return amps_; }
  const Amplitude& operator[](std::size_t i) const noexcept { return amps_[i]; }

  double norm_squared() const noexcept;
  /// Largest |Im amp|.
  double max_imag() const noexcept;

  /// Applies g in place. Throws InvalidInput for qubits outside the width.
  void apply(const Gate& g);

 private:
  StateVector(std::size_t width, std::vector<Amplitude> amps)
      : width_(width), amps_(std::move(amps)) {}

  std::size_t width_;
  std::vector<Amplitude> amps_;
};

inline StateVector zero_state(std::size_t width) { return StateVector::zero_state(width); }

/// Value-semantics gate application.
StateVector apply(StateVector s, const Gate& g);

/// Runs c from |0...0>.
StateVector run(const Circuit& c);

/// Runs c from an arbitrary initial state of the same width.
StateVector run_from(StateVector s, const Circuit& c);

/// |<s|t>|^2, clamped to [0, 1]. Throws InvalidInput on width mismatch.
double fidelity(const StateVector& s, const StateVector& t);

/// Real orthogonal matrix realized by `gates` on a `width`-qubit register
/// (column j = image of basis state j). Imaginary parts are dropped; the
/// gate set is real.
RealMatrix composed_matrix(std::span<const Gate> gates, std::size_t width);

}  // namespace schmidt
