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

#include "schmidt/simulator.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "schmidt/errors.hpp"

namespace schmidt {

namespace {

bool is_power_of_two(std::size_t n) { return n >= 2 && std::has_single_bit(n); }

}  // namespace

StateVector StateVector::zero_state(std::size_t width) {
  if (width < 1 || width > kMaxSimulatedQubits) {
    throw InvalidInput("state width " + std::to_string(width) + " outside [1, " +
                       std::to_string(kMaxSimulatedQubits) + "]");
  }
  std::vector<Amplitude> amps(std::size_t{1} << width);
  amps[0] = 1.0;
  return StateVector(width, std::move(amps));
}

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amps) {
  if (!is_power_of_two(amps.size())) {
    throw InvalidInput("amplitude count " + std::to_string(amps.size()) +
                       " is not a power of two >= 2");
  }
  const auto width = static_cast<std::size_t>(std::countr_zero(amps.size()));
  if (width > kMaxSimulatedQubits) throw InvalidInput("state too wide to simulate");
  StateVector s(width, std::move(amps));
  if (std::abs(s.norm_squared() - 1.0) > 1e-10) {
    throw InvalidInput("amplitudes are not normalized");
  }
  return s;
}

StateVector StateVector::from_real(std::span<const double> values) {
  return from_amplitudes(std::vector<Amplitude>(values.begin(), values.end()));
}

double StateVector::norm_squared() const noexcept {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return s;
}

double StateVector::max_imag() const noexcept {
  double m = 0.0;
  for (const auto& a : amps_) m = std::max(m, std::abs(a.imag()));
  return m;
}

void StateVector::apply(const Gate& g) {
  validate_gate(g, width_);
  const std::size_t n = amps_.size();
  auto mask = [this](Qubit q) { return std::size_t{1} << (width_ - 1 - q); };

  if (const auto* r = std::get_if<Rot>(&g)) {
    const std::size_t m = mask(r->target);
    const double c = std::cos(r->theta);
    const double s = std::sin(r->theta);
    for (std::size_t i = 0; i < n; ++i) {
      if (i & m) continue;
      const Amplitude a0 = amps_[i];
      const Amplitude a1 = amps_[i | m];
      amps_[i] = c * a0 - s * a1;
      amps_[i | m] = s * a0 + c * a1;
    }
  } else if (const auto* x = std::get_if<PauliX>(&g)) {
    const std::size_t m = mask(x->target);
    for (std::size_t i = 0; i < n; ++i)
      if (!(i & m)) std::swap(amps_[i], amps_[i | m]);
  } else if (const auto* cx = std::get_if<Cnot>(&g)) {
    const std::size_t mc = mask(cx->control);
    const std::size_t mt = mask(cx->target);
    for (std::size_t i = 0; i < n; ++i)
      if ((i & mc) && !(i & mt)) std::swap(amps_[i], amps_[i | mt]);
  } else if (const auto* sw = std::get_if<Swap>(&g)) {
    const std::size_t ma = mask(sw->a);
    const std::size_t mb = mask(sw->b);
    for (std::size_t i = 0; i < n; ++i)
      if ((i & ma) && !(i & mb)) std::swap(amps_[i], amps_[(i & ~ma) | mb]);
  } else if (const auto* op = std::get_if<Opaque>(&g)) {
    const std::size_t k = op->targets.size();
    const std::size_t dim = std::size_t{1} << k;
    std::vector<std::size_t> offset(dim, 0);
    std::size_t all = 0;
    for (std::size_t sub = 0; sub < dim; ++sub) {
      for (std::size_t t = 0; t < k; ++t)
        if (sub & (std::size_t{1} << (k - 1 - t))) offset[sub] |= mask(op->targets[t]);
    }
    for (Qubit q : op->targets) all |= mask(q);
    std::vector<Amplitude> in(dim);
    for (std::size_t base = 0; base < n; ++base) {
      if (base & all) continue;
      for (std::size_t sub = 0; sub < dim; ++sub) in[sub] = amps_[base | offset[sub]];
      for (std::size_t r = 0; r < dim; ++r) {
        Amplitude acc = 0.0;
        for (std::size_t c = 0; c < dim; ++c) acc += op->matrix(r, c) * in[c];
        amps_[base | offset[r]] = acc;
      }
    }
  }
}

StateVector apply(StateVector s, const Gate& g) {
  s.apply(g);
  return s;
}

StateVector run_from(StateVector s, const Circuit& c) {
  if (s.width() != c.width()) {
    throw InvalidInput("state width " + std::to_string(s.width()) + " != circuit width " +
                       std::to_string(c.width()));
  }
  for (const auto& g : c.gates()) s.apply(g);
  return s;
}

StateVector run(const Circuit& c) { return run_from(StateVector::zero_state(c.width()), c); }

double fidelity(const StateVector& s, const StateVector& t) {
  if (s.width() != t.width()) {
    throw InvalidInput("fidelity: widths " + std::to_string(s.width()) + " and " +
                       std::to_string(t.width()) + " differ");
  }
  Amplitude overlap = 0.0;
  for (std::size_t i = 0; i < s.dim(); ++i) overlap += std::conj(s[i]) * t[i];
  return std::clamp(std::norm(overlap), 0.0, 1.0);
}

RealMatrix composed_matrix(std::span<const Gate> gates, std::size_t width) {
  const std::size_t dim = std::size_t{1} << width;
  RealMatrix m(dim, dim);
  std::vector<Amplitude> basis(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    std::fill(basis.begin(), basis.end(), Amplitude{});
    basis[j] = 1.0;
    StateVector s = StateVector::from_amplitudes(basis);
    for (const auto& g : gates) s.apply(g);
    for (std::size_t i = 0; i < dim; ++i) m(i, j) = s[i].real();
  }
  return m;
}

}  // namespace schmidt
