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

#include "schmidt/synth.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "schmidt/errors.hpp"
#include "schmidt/simulator.hpp"

namespace schmidt {

std::string_view to_string(SynthPath p) {
  switch (p) {
    case SynthPath::kAffinePermutation: return "affine-permutation";
    case SynthPath::kKroneckerProduct: return "kronecker-product";
    case SynthPath::kGivensFallback: return "givens-fallback";
    case SynthPath::kOpaque: return "opaque";
  }
  return "unknown";
}

std::string_view to_string(SynthMode m) {
  return m == SynthMode::kExact ? "exact" : "opaque";
}

namespace {

// Below this a rotation angle is treated as the identity and not emitted.
constexpr double kNegligibleAngle = 1e-14;

// Number of qubits for a dim x dim matrix, or nothing if dim is not 2^k.
std::optional<std::size_t> qubit_count(const RealMatrix& m) {
  if (!m.square() || m.rows() < 2 || !std::has_single_bit(m.rows())) return std::nullopt;
  return static_cast<std::size_t>(std::countr_zero(m.rows()));
}

std::vector<Gate> remap(const std::vector<Gate>& local, std::span<const Qubit> targets) {
  std::vector<Gate> out;
  out.reserve(local.size());
  for (const Gate& g : local) {
    if (const auto* r = std::get_if<Rot>(&g)) {
      out.emplace_back(Rot{r->theta, targets[r->target]});
    } else if (const auto* x = std::get_if<PauliX>(&g)) {
      out.emplace_back(PauliX{targets[x->target]});
    } else if (const auto* c = std::get_if<Cnot>(&g)) {
      out.emplace_back(Cnot{targets[c->control], targets[c->target]});
    } else if (const auto* s = std::get_if<Swap>(&g)) {
      out.emplace_back(Swap{targets[s->a], targets[s->b]});
    } else {
      const auto& o = std::get<Opaque>(g);
      std::vector<Qubit> ts;
      for (Qubit q : o.targets) ts.push_back(targets[q]);
      out.emplace_back(Opaque{std::move(ts), o.matrix});
    }
  }
  return out;
}

bool matches(const std::vector<Gate>& local, std::size_t k, const RealMatrix& m, double tol) {
  return max_abs_diff(composed_matrix(local, k), m) <= tol;
}

// ---- GF(2) helpers; bit t of a word is local qubit t ------------------------

using BitMatrix = std::vector<std::vector<bool>>;  // [row][col]

std::size_t to_word(std::size_t index, std::size_t k) {
  // Basis index (qubit 0 = MSB) -> word with bit t = value of qubit t.
  std::size_t w = 0;
  for (std::size_t t = 0; t < k; ++t)
    if (index & (std::size_t{1} << (k - 1 - t))) w |= std::size_t{1} << t;
  return w;
}

std::size_t apply_affine(const BitMatrix& a, std::size_t b, std::size_t x, std::size_t k) {
  std::size_t y = b;
  for (std::size_t r = 0; r < k; ++r) {
    bool bit = false;
    for (std::size_t c = 0; c < k; ++c) bit ^= a[r][c] && ((x >> c) & 1U);
    if (bit) y ^= std::size_t{1} << r;
  }
  return y;
}

// Solves a * x = b over GF(2); a must be invertible.
std::size_t solve_gf2(BitMatrix a, std::size_t b, std::size_t k) {
  std::vector<bool> rhs(k);
  for (std::size_t r = 0; r < k; ++r) rhs[r] = (b >> r) & 1U;
  for (std::size_t p = 0; p < k; ++p) {
    std::size_t piv = p;
    while (!a[piv][p]) ++piv;
    std::swap(a[piv], a[p]);
    std::swap(rhs[piv], rhs[p]);
    for (std::size_t r = 0; r < k; ++r) {
      if (r != p && a[r][p]) {
        for (std::size_t c = 0; c < k; ++c) a[r][c] = a[r][c] ^ a[p][c];
        rhs[r] = rhs[r] ^ rhs[p];
      }
    }
  }
  std::size_t x = 0;
  for (std::size_t r = 0; r < k; ++r)
    if (rhs[r]) x |= std::size_t{1} << r;
  return x;
}

// Row-reduces a to the identity, recording each row operation as a gate;
// the reversed record realizes x -> a x.
std::vector<Gate> linear_map_gates(BitMatrix a, std::size_t k) {
  std::vector<Gate> ops;
  for (std::size_t p = 0; p < k; ++p) {
    std::size_t piv = p;
    while (!a[piv][p]) ++piv;
    if (piv != p) {
      std::swap(a[piv], a[p]);
      ops.emplace_back(Swap{p, piv});
    }
    for (std::size_t r = 0; r < k; ++r) {
      if (r != p && a[r][p]) {
        for (std::size_t c = 0; c < k; ++c) a[r][c] = a[r][c] ^ a[p][c];
        ops.emplace_back(Cnot{p, r});
      }
    }
  }
  std::reverse(ops.begin(), ops.end());
  return ops;
}

// ---- Kronecker factoring ---------------------------------------------------

RealMatrix kron(const RealMatrix& a, const RealMatrix& b) {
  RealMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
          out(i * b.rows() + r, j * b.cols() + c) = a(i, j) * b(r, c);
  return out;
}

// Nearest-Kronecker split m ~ a (2x2) (x) rest, by a rank-1 fit of the
// rearranged matrix. Returns false if a is not orthogonal.
bool split_leading_factor(const RealMatrix& m, RealMatrix& a, RealMatrix& rest) {
  const std::size_t h = m.rows() / 2;
  RealMatrix r(4, h * h);
  for (std::size_t a1 = 0; a1 < 2; ++a1)
    for (std::size_t b1 = 0; b1 < 2; ++b1)
      for (std::size_t ar = 0; ar < h; ++ar)
        for (std::size_t br = 0; br < h; ++br)
          r(a1 * 2 + b1, ar * h + br) = m(a1 * h + ar, b1 * h + br);
  const SvdResult f = svd(r);
  const double scale = std::sqrt(2.0);
  a = RealMatrix(2, 2);
  for (std::size_t i = 0; i < 4; ++i) a(i / 2, i % 2) = f.u(i, 0) * scale;
  rest = RealMatrix(h, h);
  for (std::size_t i = 0; i < h * h; ++i) rest(i / h, i % h) = f.v(i, 0) * f.sigma[0] / scale;
  return orthogonality_defect(a) <= 1e-8;
}

void emit_local_factor(const RealMatrix& f, Qubit q, std::vector<Gate>& out) {
  if (determinant(f) > 0.0) {
    const double theta = std::atan2(f(1, 0), f(0, 0));
    if (std::abs(theta) > kNegligibleAngle) out.emplace_back(Rot{theta, q});
  } else {
    // f = Rot(phi) * X.
    const double phi = std::atan2(-f(0, 0), f(1, 0));
    out.emplace_back(PauliX{q});
    if (std::abs(phi) > kNegligibleAngle) out.emplace_back(Rot{phi, q});
  }
}

// SWAPs that move qubit perm[t] into slot t.
std::vector<Gate> permutation_swaps(const std::vector<std::size_t>& perm) {
  std::vector<std::size_t> cur(perm.size());
  std::iota(cur.begin(), cur.end(), 0);
  std::vector<Gate> out;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (cur[i] == perm[i]) continue;
    const auto j = static_cast<std::size_t>(
        std::find(cur.begin() + static_cast<std::ptrdiff_t>(i), cur.end(), perm[i]) - cur.begin());
    std::swap(cur[i], cur[j]);
    out.emplace_back(Swap{i, j});
  }
  return out;
}

constexpr std::size_t kMaxPermutedKroneckerQubits = 5;

std::optional<std::vector<Gate>> recognize_permuted_kronecker(const RealMatrix& m, std::size_t k) {
  if (auto g = recognize_kronecker_rotations(m)) return g;
  if (k < 2 || k > kMaxPermutedKroneckerQubits) return std::nullopt;
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  while (std::next_permutation(perm.begin(), perm.end())) {
    std::vector<Gate> swaps = permutation_swaps(perm);
    // m = K * P  =>  K = m * P^T.
    const RealMatrix p = composed_matrix(swaps, k);
    if (auto local = recognize_kronecker_rotations(matmul(m, p.transpose()))) {
      swaps.insert(swaps.end(), local->begin(), local->end());
      if (matches(swaps, k, m, kRecognizerTolerance)) return swaps;
    }
  }
  return std::nullopt;
}

void require_orthogonal(const RealMatrix& m, const char* who) {
  if (!m.square()) throw InvalidInput(std::string(who) + ": matrix is not square");
  if (orthogonality_defect(m) > kOrthogonalityTolerance) {
    throw InvalidInput(std::string(who) + ": matrix is not orthogonal within 1e-10");
  }
}

}  // namespace

std::optional<std::vector<Gate>> recognize_affine_permutation(const RealMatrix& m) {
  const auto kk = qubit_count(m);
  if (!kk) return std::nullopt;
  const std::size_t k = *kk;
  const std::size_t n = m.rows();

  // f[x] = y where m|x> = |y>, as qubit words.
  std::vector<std::size_t> f(n);
  std::vector<bool> hit(n, false);
  for (std::size_t col = 0; col < n; ++col) {
    std::optional<std::size_t> one;
    for (std::size_t row = 0; row < n; ++row) {
      const double v = m(row, col);
      if (std::abs(v - 1.0) <= kRecognizerTolerance) {
        if (one) return std::nullopt;
        one = row;
      } else if (std::abs(v) > kRecognizerTolerance) {
        return std::nullopt;
      }
    }
    if (!one || hit[*one]) return std::nullopt;
    hit[*one] = true;
    f[to_word(col, k)] = to_word(*one, k);
  }

  const std::size_t b = f[0];
  BitMatrix a(k, std::vector<bool>(k, false));
  for (std::size_t c = 0; c < k; ++c) {
    const std::size_t image = f[std::size_t{1} << c] ^ b;
    for (std::size_t r = 0; r < k; ++r) a[r][c] = (image >> r) & 1U;
  }
  for (std::size_t x = 0; x < n; ++x)
    if (apply_affine(a, b, x, k) != f[x]) return std::nullopt;

  std::vector<Gate> gates;
  const std::size_t shift = solve_gf2(a, b, k);
  for (std::size_t t = 0; t < k; ++t)
    if ((shift >> t) & 1U) gates.emplace_back(PauliX{t});
  for (Gate& g : linear_map_gates(a, k)) gates.push_back(std::move(g));
  if (!matches(gates, k, m, kRecognizerTolerance)) return std::nullopt;
  return gates;
}

std::optional<std::vector<Gate>> recognize_kronecker_rotations(const RealMatrix& m) {
  const auto kk = qubit_count(m);
  if (!kk) return std::nullopt;
  const std::size_t k = *kk;

  std::vector<RealMatrix> factors;
  RealMatrix rest = m;
  while (rest.rows() > 2) {
    RealMatrix a;
    RealMatrix next;
    if (!split_leading_factor(rest, a, next)) return std::nullopt;
    factors.push_back(std::move(a));
    rest = std::move(next);
  }
  if (orthogonality_defect(rest) > 1e-8) return std::nullopt;
  factors.push_back(std::move(rest));

  RealMatrix product = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) product = kron(product, factors[i]);
  if (max_abs_diff(product, m) > kRecognizerTolerance) return std::nullopt;

  std::vector<Gate> gates;
  for (std::size_t t = 0; t < k; ++t) emit_local_factor(factors[t], t, gates);
  if (!matches(gates, k, m, kRecognizerTolerance)) return std::nullopt;
  return gates;
}

RealMatrix two_level_matrix(const TwoLevelRotation& g, std::size_t dim) {
  RealMatrix m = RealMatrix::identity(dim);
  const double c = std::cos(g.theta);
  const double s = std::sin(g.theta);
  m(g.i, g.i) = c;
  m(g.j, g.i) = s;
  m(g.i, g.j) = -s;
  m(g.j, g.j) = c;
  return m;
}

std::vector<TwoLevelRotation> givens_decompose(const RealMatrix& m) {
  require_orthogonal(m, "givens_decompose");
  const std::size_t n = m.rows();
  RealMatrix a = m;
  // m = G_1 G_2 ... G_L; recorded in that order and reversed at the end.
  std::vector<TwoLevelRotation> factors;
  auto rotate_rows = [&](std::size_t i, std::size_t j, double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    for (std::size_t col = 0; col < n; ++col) {
      const double ai = a(i, col);
      const double aj = a(j, col);
      a(i, col) = c * ai + s * aj;
      a(j, col) = -s * ai + c * aj;
    }
    factors.push_back({i, j, theta});
  };
  for (std::size_t c = 0; c + 1 < n; ++c) {
    for (std::size_t r = c + 1; r < n; ++r) {
      if (std::abs(a(r, c)) <= 1e-15) continue;
      rotate_rows(c, r, std::atan2(a(r, c), a(c, c)));
    }
    if (a(c, c) < 0.0) rotate_rows(c, c + 1, std::numbers::pi);
  }
  if (a(n - 1, n - 1) < 0.0) {
    throw SynthesisError("givens_decompose: determinant is -1; two-level rotations only reach SO(n)");
  }
  std::reverse(factors.begin(), factors.end());
  return factors;
}

std::vector<Gate> controlled_rot(double theta, std::span<const Qubit> controls, Qubit target) {
  if (controls.empty()) return {Rot{theta, target}};
  const Qubit last = controls.back();
  const auto rest = controls.first(controls.size() - 1);
  std::vector<Gate> out = controlled_rot(theta / 2.0, rest, target);
  out.emplace_back(Cnot{last, target});
  for (Gate& g : controlled_rot(-theta / 2.0, rest, target)) out.push_back(std::move(g));
  out.emplace_back(Cnot{last, target});
  return out;
}

std::vector<Gate> two_level_to_gates(std::size_t i, std::size_t j, double theta,
                                     std::span<const Qubit> targets) {
  const std::size_t k = targets.size();
  const std::size_t dim = std::size_t{1} << k;
  if (k == 0 || i >= dim || j >= dim || i == j) {
    throw InvalidInput("two_level_to_gates: need distinct basis indices below " +
                       std::to_string(dim));
  }
  if (theta == 0.0) return {};
  auto qubit_of_bit = [k](std::size_t bit) { return k - 1 - bit; };

  const std::size_t diff = i ^ j;
  const auto pivot_bit = static_cast<std::size_t>(std::countr_zero(diff));
  const Qubit pivot = qubit_of_bit(pivot_bit);
  const std::size_t pivot_mask = std::size_t{1} << pivot_bit;

  std::vector<Gate> steer;
  for (std::size_t bit = 0; bit < k; ++bit) {
    if (bit != pivot_bit && ((diff >> bit) & 1U)) {
      steer.emplace_back(Cnot{targets[pivot], targets[qubit_of_bit(bit)]});
    }
  }
  // After steering, the state with the pivot bit clear is unchanged; the
  // pair differs only on the pivot.
  const std::size_t base = (i & pivot_mask) ? j : i;
  const double angle = (i & pivot_mask) ? -theta : theta;

  std::vector<Qubit> controls;
  std::vector<Gate> flips;
  for (std::size_t bit = k; bit-- > 0;) {
    if (bit == pivot_bit) continue;
    const Qubit q = targets[qubit_of_bit(bit)];
    controls.push_back(q);
    if (!((base >> bit) & 1U)) flips.emplace_back(PauliX{q});
  }

  std::vector<Gate> out = steer;
  out.insert(out.end(), flips.begin(), flips.end());
  for (Gate& g : controlled_rot(angle, controls, targets[pivot])) out.push_back(std::move(g));
  out.insert(out.end(), flips.begin(), flips.end());
  out.insert(out.end(), steer.rbegin(), steer.rend());
  return out;
}

std::vector<Gate> multiplexed_rot(std::span<const double> angles, std::span<const Qubit> controls,
                                  Qubit target) {
  const std::size_t m = controls.size();
  if (m == 0) throw InvalidInput("multiplexed_rot needs at least one control");
  const std::size_t n = std::size_t{1} << m;
  if (angles.size() != n) {
    throw InvalidInput("multiplexed_rot: " + std::to_string(angles.size()) + " angles for " +
                       std::to_string(m) + " controls (expected " + std::to_string(n) + ")");
  }
  auto gray = [](std::size_t i) { return i ^ (i >> 1); };

  std::vector<Gate> out;
  out.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    double theta = 0.0;
    for (std::size_t b = 0; b < n; ++b) {
      const bool odd = std::popcount(b & gray(i)) & 1;
      theta += odd ? -angles[b] : angles[b];
    }
    out.emplace_back(Rot{theta / static_cast<double>(n), target});
    const auto bit =
        static_cast<std::size_t>(std::countr_zero(gray(i) ^ gray((i + 1) % n)));
    out.emplace_back(Cnot{controls[m - 1 - bit], target});
  }
  return out;
}

SynthesisOutcome synthesize_orthogonal(const RealMatrix& m, std::span<const Qubit> targets,
                                       SynthMode mode) {
  const auto kk = qubit_count(m);
  if (!kk) {
    throw InvalidInput("synthesize_orthogonal: " + std::to_string(m.rows()) + "x" +
                       std::to_string(m.cols()) + " is not a 2^k x 2^k matrix");
  }
  const std::size_t k = *kk;
  if (targets.size() != k) {
    throw InvalidInput("synthesize_orthogonal: matrix acts on " + std::to_string(k) +
                       " qubits but " + std::to_string(targets.size()) + " targets given");
  }
  require_orthogonal(m, "synthesize_orthogonal");

  std::vector<Gate> local;
  SynthPath path;
  if (mode == SynthMode::kOpaque) {
    std::vector<Qubit> ts(k);
    std::iota(ts.begin(), ts.end(), 0);
    local.emplace_back(Opaque{std::move(ts), m});
    path = SynthPath::kOpaque;
  } else if (auto perm = recognize_affine_permutation(m)) {
    local = std::move(*perm);
    path = SynthPath::kAffinePermutation;
  } else if (auto prod = recognize_permuted_kronecker(m, k)) {
    local = std::move(*prod);
    path = SynthPath::kKroneckerProduct;
  } else {
    RealMatrix even = m;
    if (determinant(m) < 0.0) {
      // m = even * P with P an odd-parity gate applied first.
      if (k >= 3) {
        throw SynthesisError("synthesize_orthogonal: determinant -1 on " + std::to_string(k) +
                             " qubits is not reachable with ROT/X/CNOT/SWAP");
      }
      local.emplace_back(k == 1 ? Gate{PauliX{0}} : Gate{Cnot{0, 1}});
      even = matmul(m, composed_matrix(local, k));
    }
    std::vector<Qubit> all(k);
    std::iota(all.begin(), all.end(), 0);
    for (const auto& g : givens_decompose(even)) {
      for (Gate& gate : two_level_to_gates(g.i, g.j, g.theta, all)) local.push_back(std::move(gate));
    }
    path = SynthPath::kGivensFallback;
  }

  const double residual = max_abs_diff(composed_matrix(local, k), m);
  if (path != SynthPath::kOpaque && residual > kSynthesisResidualLimit) {
    throw SynthesisError("synthesize_orthogonal: " + std::string(to_string(path)) +
                         " residual " + std::to_string(residual) + " exceeds 1e-9");
  }
  return SynthesisOutcome{remap(local, targets), path, residual};
}

}  // namespace schmidt
