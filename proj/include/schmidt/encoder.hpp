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
#include <vector>

#include "schmidt/circuit.hpp"
#include "schmidt/numerics.hpp"
#include "schmidt/synth.hpp"

namespace schmidt {

/// Unit-norm real amplitude vector of length 2^q, q >= 1.
class DataVector {
 public:
  std::span<const double> values() const noexcept { return values_; }
  std::size_t qubits() const noexcept { return qubits_; }
  std::size_t size() const noexcept { return values_.size(); }
  /// Euclidean norm of the raw input before normalization.
  double input_norm() const noexcept { return input_norm_; }

 private:
  friend DataVector normalize(std::span<const double> raw);
  DataVector(std::vector<double> v, std::size_t q, double norm)
      : values_(std::move(v)), qubits_(q), input_norm_(norm) {}

  std::vector<double> values_;
  std::size_t qubits_;
  double input_norm_;
};

/// Scales raw to unit norm. Throws InvalidInput if the length is not a
/// power of two >= 2, any value is non-finite, or the vector is zero.
DataVector normalize(std::span<const double> raw);

/// Bipartition of a q-qubit amplitude vector: the leading ceil(q/2) qubits
/// index rows of c, the trailing floor(q/2) qubits index columns.
struct SchmidtSplit {
  std::size_t left_qubits;
  std::size_t right_qubits;
  RealMatrix c;
  SvdResult svd;
  std::vector<double> lambda;  // Schmidt coefficients, descending
  std::size_t rank;
};

/// Throws InvalidInput for q < 2.
SchmidtSplit schmidt_split(const DataVector& d, double rank_tol = kDefaultRankTolerance);

enum class EncoderKind { kSchmidt, kNaive };
std::string_view to_string(EncoderKind k);

struct EncodeOptions {
  SynthMode synth = SynthMode::kExact;
  double rank_tol = kDefaultRankTolerance;
  /// Simulate the result and fill EncodeReport::fidelity.
  bool verify = true;
};

/// One Schmidt split in the recursion, outermost first.
struct SchmidtLevel {
  std::size_t depth;
  Qubit first_qubit;
  std::size_t qubits;
  std::size_t rank;
};

/// Which synthesis path compiled one basis change.
struct SynthesisRecord {
  std::size_t depth;
  std::string register_name;  // "U" (leading register) or "V" (trailing)
  std::vector<Qubit> qubits;
  SynthPath path;
};

/// Gate positions that close each construction step of the outermost
/// split: gates [0, step1_end) prepare the coefficients, [step1_end,
/// step2_end) are the CNOT fan, then U up to step3_end, then V.
struct StageMarks {
  std::size_t step1_end = 0;
  std::size_t step2_end = 0;
  std::size_t step3_end = 0;
};

struct EncodeReport {
  EncoderKind kind = EncoderKind::kSchmidt;
  SynthMode synth = SynthMode::kExact;
  std::optional<double> fidelity;
  GateCounts counts;
  std::vector<SchmidtLevel> schmidt_levels;
  std::vector<SynthesisRecord> synthesis;
  std::optional<StageMarks> top_level_stages;
};

struct EncodeResult {
  Circuit circuit;
  EncodeReport report;
};

/// Recursive Schmidt-decomposition state preparation:
///   q = 1   one ROT(atan2(v1, v0));
///   rank 1  prepare u0 on the leading register and v0 on the trailing one;
///   else    (1) prepare the Schmidt coefficients on the leading register by
///           recursion, (2) copy the basis label across with a CNOT fan,
///           (3) apply U on the leading register, (4) apply V on the trailing
///           register.
EncodeResult encode_schmidt(const DataVector& d, const EncodeOptions& opts = {});

/// Baseline: ROT on qubit 0, then a multiplexed rotation with k controls
/// for qubit k. Uses exactly 2^q - 2 CNOTs.
EncodeResult encode_naive(const DataVector& d, const EncodeOptions& opts = {});

struct Comparison {
  EncodeResult schmidt;
  EncodeResult naive;
};

/// Runs both encoders on the same data. Throws InvalidInput for q < 2.
Comparison compare(const DataVector& d, const EncodeOptions& opts = {});

/// Fidelity of run(c) against d.
double verify_fidelity(const Circuit& c, const DataVector& d);

}  // namespace schmidt
