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

#include "schmidt/encoder.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "schmidt/errors.hpp"
#include "schmidt/simulator.hpp"

namespace schmidt {

namespace {

constexpr double kNegligibleAngle = 1e-14;

std::vector<Qubit> qubit_range(Qubit first, std::size_t n) {
  std::vector<Qubit> qs(n);
  for (std::size_t i = 0; i < n; ++i) qs[i] = first + i;
  return qs;
}

void negate_column(RealMatrix& m, std::size_t col) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, col) = -m(r, col);
}

class SchmidtCompiler {
 public:
  SchmidtCompiler(Circuit& circuit, EncodeReport& report, const EncodeOptions& opts)
      : circuit_(circuit), report_(report), opts_(opts) {}

  // Appends gates preparing the unit vector `v` on qubits [first, first+n).
  void encode(std::span<const double> v, Qubit first, std::size_t n, std::size_t depth) {
    if (n == 1) {
      const double theta = std::atan2(v[1], v[0]);
      if (std::abs(theta) > kNegligibleAngle) circuit_.push(Rot{theta, first});
      return;
    }
    const std::size_t left = (n + 1) / 2;
    const std::size_t right = n / 2;
    const std::size_t rows = std::size_t{1} << left;
    const std::size_t cols = std::size_t{1} << right;
    SvdResult f = svd(RealMatrix(rows, cols, std::vector<double>(v.begin(), v.end())));
    const std::size_t rank = rank_with_tolerance(f.sigma, opts_.rank_tol);
    report_.schmidt_levels.push_back({depth, first, n, rank});
    const bool top = depth == 0;
    StageMarks marks;

    if (rank <= 1) {
      marks.step1_end = marks.step2_end = circuit_.size();
      encode(f.u.column(0), first, left, depth + 1);
      marks.step3_end = circuit_.size();
      encode(f.v.column(0), first + left, right, depth + 1);
      if (top) report_.top_level_stages = marks;
      return;
    }

    std::vector<double> lambda(rows, 0.0);
    for (std::size_t i = 0; i < rank; ++i) lambda[i] = f.sigma[i];

    if (opts_.synth == SynthMode::kExact) {
      // Registers of three or more qubits only reach det +1; move the odd
      // sign onto the last column and, if that column is in use, onto the
      // matching coefficient.
      auto fix_parity = [&](RealMatrix& basis, std::size_t qubits) {
        if (qubits < 3 || determinant(basis) > 0.0) return;
        const std::size_t last = basis.cols() - 1;
        negate_column(basis, last);
        if (last < rank) lambda[last] = -lambda[last];
      };
      fix_parity(f.u, left);
      fix_parity(f.v, right);
    }

    encode(lambda, first, left, depth + 1);
    marks.step1_end = circuit_.size();

    // Schmidt labels below `rank` live in the low-order `fan` qubits of
    // each register.
    const auto fan = static_cast<std::size_t>(std::bit_width(rank - 1));
    for (std::size_t t = 0; t < fan; ++t) {
      circuit_.push(Cnot{first + left - fan + t, first + left + right - fan + t});
    }
    marks.step2_end = circuit_.size();

    synthesize("U", f.u, qubit_range(first, left), depth);
    marks.step3_end = circuit_.size();
    synthesize("V", f.v, qubit_range(first + left, right), depth);
    if (top) report_.top_level_stages = marks;
  }

 private:
  void synthesize(const char* name, const RealMatrix& m, const std::vector<Qubit>& qubits,
                  std::size_t depth) {
    SynthesisOutcome out = synthesize_orthogonal(m, qubits, opts_.synth);
    circuit_.extend(out.gates);
    report_.synthesis.push_back({depth, name, qubits, out.path});
  }

  Circuit& circuit_;
  EncodeReport& report_;
  const EncodeOptions& opts_;
};

void finish_report(EncodeResult& r, const DataVector& d, const EncodeOptions& opts) {
  r.report.synth = opts.synth;
  r.report.counts = count_gates(r.circuit);
  if (opts.verify && d.qubits() <= kMaxSimulatedQubits) {
    r.report.fidelity = verify_fidelity(r.circuit, d);
  }
}

}  // namespace

std::string_view to_string(EncoderKind k) {
  return k == EncoderKind::kSchmidt ? "schmidt" : "naive";
}

DataVector normalize(std::span<const double> raw) {
  const std::size_t n = raw.size();
  if (n == 1) throw InvalidInput("length 1 is too short; need at least 2 values");
  if (!std::has_single_bit(n)) {
    throw InvalidInput("length " + std::to_string(n) + " is not a power of two");
  }
  double sum = 0.0;
  for (double x : raw) {
    if (!std::isfinite(x)) throw InvalidInput("input contains a non-finite value");
    sum += x * x;
  }
  const double norm = std::sqrt(sum);
  if (norm == 0.0) throw InvalidInput("input is the zero vector");
  std::vector<double> values(raw.begin(), raw.end());
  for (double& x : values) x /= norm;
  return DataVector(std::move(values), static_cast<std::size_t>(std::countr_zero(n)), norm);
}

SchmidtSplit schmidt_split(const DataVector& d, double rank_tol) {
  const std::size_t q = d.qubits();
  if (q < 2) throw InvalidInput("schmidt_split needs at least 2 qubits");
  const std::size_t left = (q + 1) / 2;
  const std::size_t right = q / 2;
  RealMatrix c(std::size_t{1} << left, std::size_t{1} << right,
               std::vector<double>(d.values().begin(), d.values().end()));
  SvdResult f = svd(c);
  const std::size_t rank = rank_with_tolerance(f.sigma, rank_tol);
  std::vector<double> lambda = f.sigma;
  return SchmidtSplit{left, right, std::move(c), std::move(f), std::move(lambda), rank};
}

double verify_fidelity(const Circuit& c, const DataVector& d) {
  return fidelity(run(c), StateVector::from_real(d.values()));
}

EncodeResult encode_schmidt(const DataVector& d, const EncodeOptions& opts) {
  EncodeResult r{Circuit(d.qubits()), {}};
  r.report.kind = EncoderKind::kSchmidt;
  SchmidtCompiler(r.circuit, r.report, opts).encode(d.values(), 0, d.qubits(), 0);
  finish_report(r, d, opts);
  return r;
}

EncodeResult encode_naive(const DataVector& d, const EncodeOptions& opts) {
  const std::size_t q = d.qubits();
  const auto v = d.values();
  EncodeResult r{Circuit(q), {}};
  r.report.kind = EncoderKind::kNaive;

  // Norm of the amplitudes whose leading `level` qubits spell `prefix`.
  auto subtree_norm = [&](std::size_t level, std::size_t prefix) {
    const std::size_t span = std::size_t{1} << (q - level);
    double s = 0.0;
    for (std::size_t i = prefix * span; i < (prefix + 1) * span; ++i) s += v[i] * v[i];
    return std::sqrt(s);
  };

  std::vector<Qubit> controls;
  for (std::size_t k = 0; k < q; ++k) {
    const std::size_t branches = std::size_t{1} << k;
    std::vector<double> angles(branches);
    for (std::size_t b = 0; b < branches; ++b) {
      if (k + 1 == q) {
        angles[b] = std::atan2(v[2 * b + 1], v[2 * b]);
      } else {
        angles[b] = std::atan2(subtree_norm(k + 1, 2 * b + 1), subtree_norm(k + 1, 2 * b));
      }
    }
    if (k == 0) {
      r.circuit.push(Rot{angles[0], 0});
    } else {
      r.circuit.extend(multiplexed_rot(angles, controls, k));
    }
    controls.push_back(k);
  }
  finish_report(r, d, opts);
  return r;
}

Comparison compare(const DataVector& d, const EncodeOptions& opts) {
  if (d.qubits() < 2) throw InvalidInput("compare needs at least 2 qubits");
  return Comparison{encode_schmidt(d, opts), encode_naive(d, opts)};
}

}  // namespace schmidt
