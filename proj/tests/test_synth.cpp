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

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "schmidt/errors.hpp"
#include "schmidt/simulator.hpp"
#include "schmidt/synth.hpp"

namespace schmidt {
namespace {

using std::numbers::pi;

double dense_residual(const std::vector<Gate>& gates, std::size_t width, const RealMatrix& m) {
  return max_abs_diff(oracle::from_eigen(oracle::circuit_matrix(gates, width)), m);
}

RealMatrix permutation_matrix(const std::vector<std::size_t>& image) {
  RealMatrix m(image.size(), image.size());
  for (std::size_t c = 0; c < image.size(); ++c) m(image[c], c) = 1.0;
  return m;
}

RealMatrix kron(const RealMatrix& a, const RealMatrix& b) {
  RealMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

// Every affine map x -> Ax + b over GF(2)^2, listed by brute force.
bool is_affine_two_bit(const std::vector<std::size_t>& image) {
  for (unsigned a = 0; a < 16; ++a) {
    const unsigned a00 = a & 1, a01 = (a >> 1) & 1, a10 = (a >> 2) & 1, a11 = (a >> 3) & 1;
    if (((a00 & a11) ^ (a01 & a10)) == 0) continue;
    for (unsigned b = 0; b < 4; ++b) {
      bool ok = true;
      for (unsigned x = 0; x < 4 && ok; ++x) {
        const unsigned x0 = (x >> 1) & 1, x1 = x & 1;
        const unsigned y0 = (a00 & x0) ^ (a01 & x1) ^ ((b >> 1) & 1);
        const unsigned y1 = (a10 & x0) ^ (a11 & x1) ^ (b & 1);
        ok = image[x] == ((y0 << 1) | y1);
      }
      if (ok) return true;
    }
  }
  return false;
}

RealMatrix reference_u() { return RealMatrix{{0, 0, 1, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 1, 0, 0}}; }

RealMatrix reference_v() {
  const double a = std::sqrt(0.3) / 2, b = 1 / (2 * std::sqrt(10.0));
  return RealMatrix{{-b, a, 3 * b, -3 * a},
                    {-3 * b, 3 * a, -b, a},
                    {a, b, -3 * a, -3 * b},
                    {3 * a, 3 * b, a, b}};
}

TEST(SynthesizeOrthogonal, ReferenceUIsXThenSwap) {
  const std::vector<Qubit> targets{0, 1};
  const auto out = synthesize_orthogonal(reference_u(), targets);
  EXPECT_EQ(out.path, SynthPath::kAffinePermutation);
  EXPECT_EQ(out.gates, (std::vector<Gate>{PauliX{0}, Swap{0, 1}}));
  EXPECT_LE(dense_residual(out.gates, 2, reference_u()), 1e-15);
}

TEST(SynthesizeOrthogonal, IdentityIsEmpty) {
  const std::vector<Qubit> targets{0, 1};
  EXPECT_TRUE(synthesize_orthogonal(RealMatrix::identity(4), targets).gates.empty());
}

TEST(SynthesizeOrthogonal, RandomEightByEightUsesGivens) {
  std::mt19937_64 rng(20);
  const auto m = oracle::random_special_orthogonal(8, rng);
  const std::vector<Qubit> targets{0, 1, 2};
  const auto out = synthesize_orthogonal(m, targets);
  EXPECT_EQ(out.path, SynthPath::kGivensFallback);
  EXPECT_LE(out.residual, 1e-9);
  EXPECT_LE(dense_residual(out.gates, 3, m), 1e-9);
}

TEST(SynthesizeOrthogonal, RemapsToTargets) {
  std::mt19937_64 rng(21);
  const auto m = oracle::random_special_orthogonal(4, rng);
  const std::vector<Qubit> targets{3, 1};
  const auto out = synthesize_orthogonal(m, targets);
  const Eigen::MatrixXd full = oracle::circuit_matrix(out.gates, 4);
  // Embed m on qubits (3, 1) of a 4-qubit register and compare.
  const Gate embedded = Opaque{{3, 1}, m};
  const Eigen::MatrixXd ref = oracle::gate_matrix(embedded, 4);
  EXPECT_LE((full - ref).cwiseAbs().maxCoeff(), 1e-9);
}

TEST(SynthesizeOrthogonal, DeterminantMinusOneSmallRegisters) {
  std::mt19937_64 rng(22);
  for (std::size_t n : {2u, 4u}) {
    auto m = oracle::random_special_orthogonal(n, rng);
    for (std::size_t r = 0; r < n; ++r) m(r, 0) = -m(r, 0);
    const std::size_t k = n == 2 ? 1 : 2;
    std::vector<Qubit> targets(k);
    for (std::size_t i = 0; i < k; ++i) targets[i] = i;
    const auto out = synthesize_orthogonal(m, targets);
    EXPECT_LE(dense_residual(out.gates, k, m), 1e-9);
  }
}

TEST(SynthesizeOrthogonal, DeterminantMinusOneOnThreeQubitsThrows) {
  std::mt19937_64 rng(23);
  auto m = oracle::random_special_orthogonal(8, rng);
  for (std::size_t r = 0; r < 8; ++r) m(r, 0) = -m(r, 0);
  const std::vector<Qubit> targets{0, 1, 2};
  EXPECT_THROW(synthesize_orthogonal(m, targets), SynthesisError);
}

TEST(SynthesizeOrthogonal, OpaqueMode) {
  std::mt19937_64 rng(24);
  auto m = oracle::random_orthogonal(8, rng);
  const std::vector<Qubit> targets{2, 0, 1};
  const auto out = synthesize_orthogonal(m, targets, SynthMode::kOpaque);
  EXPECT_EQ(out.path, SynthPath::kOpaque);
  ASSERT_EQ(out.gates.size(), 1u);
  EXPECT_EQ(std::get<Opaque>(out.gates[0]).targets, targets);
}

TEST(SynthesizeOrthogonal, RejectsBadInput) {
  const std::vector<Qubit> two{0, 1};
  EXPECT_THROW(synthesize_orthogonal(RealMatrix{{1, 1}, {0, 1}}, std::vector<Qubit>{0}), InvalidInput);
  EXPECT_THROW(synthesize_orthogonal(RealMatrix::identity(2), two), InvalidInput);
}

TEST(AffinePermutation, SwapPermutation) {
  const auto gates = recognize_affine_permutation(permutation_matrix({0, 2, 1, 3}));
  ASSERT_TRUE(gates);
  EXPECT_EQ(*gates, (std::vector<Gate>{Swap{0, 1}}));
}

TEST(AffinePermutation, XOnLeadingQubit) {
  const auto gates = recognize_affine_permutation(permutation_matrix({2, 3, 0, 1}));
  ASSERT_TRUE(gates);
  EXPECT_EQ(*gates, (std::vector<Gate>{PauliX{0}}));
}

TEST(AffinePermutation, TwoBitThreeCycleIsLinear) {
  // 01 -> 10 -> 11 -> 01 fixing 00: A e1 = 10, A e2 = 11, so the map is linear.
  const std::vector<std::size_t> cycle{0, 2, 3, 1};
  EXPECT_TRUE(is_affine_two_bit(cycle));
  const auto m = permutation_matrix(cycle);
  const auto gates = recognize_affine_permutation(m);
  ASSERT_TRUE(gates);
  EXPECT_LE(dense_residual(*gates, 2, m), 1e-15);
  for (const auto& g : *gates) EXPECT_FALSE(std::holds_alternative<PauliX>(g));
}

TEST(AffinePermutation, ToffoliIsNotAffine) {
  EXPECT_FALSE(recognize_affine_permutation(permutation_matrix({0, 1, 2, 3, 4, 5, 7, 6})));
}

TEST(AffinePermutation, ThreeBitThreeCycleIsNotAffine) {
  // Fixes 000 and cycles 001 -> 010 -> 011; the other four points are fixed,
  // which no invertible affine map can do while moving 001.
  EXPECT_FALSE(recognize_affine_permutation(permutation_matrix({0, 2, 3, 1, 4, 5, 6, 7})));
}

TEST(AffinePermutation, AgreesWithBruteForceOnAllTwoBitPermutations) {
  std::vector<std::size_t> p{0, 1, 2, 3};
  int affine = 0;
  do {
    const auto m = permutation_matrix(p);
    const auto gates = recognize_affine_permutation(m);
    EXPECT_EQ(gates.has_value(), is_affine_two_bit(p));
    if (gates) {
      ++affine;
      EXPECT_LE(dense_residual(*gates, 2, m), 1e-15);
    }
  } while (std::next_permutation(p.begin(), p.end()));
  EXPECT_EQ(affine, 24);  // every permutation of 4 points is affine over GF(2)^2
}

TEST(AffinePermutation, ThreeBitAffineMaps) {
  std::mt19937_64 rng(25);
  // x -> Ax + b with A a random product of row operations.
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Gate> gates;
    std::uniform_int_distribution<std::size_t> q(0, 2);
    for (int g = 0; g < 6; ++g) {
      const auto a = q(rng);
      auto b = q(rng);
      while (b == a) b = q(rng);
      if (g % 3 == 0) gates.push_back(PauliX{a});
      else if (g % 3 == 1) gates.push_back(Cnot{a, b});
      else gates.push_back(Swap{a, b});
    }
    const auto m = oracle::from_eigen(oracle::circuit_matrix(gates, 3));
    const auto found = recognize_affine_permutation(m);
    ASSERT_TRUE(found);
    EXPECT_LE(dense_residual(*found, 3, m), 1e-15);
  }
}

TEST(AffinePermutation, NonPermutationRejected) {
  EXPECT_FALSE(recognize_affine_permutation(rot_matrix(0.3)));
  EXPECT_FALSE(recognize_affine_permutation(RealMatrix{{-1, 0}, {0, 1}}));
}

TEST(KroneckerRotations, ReorderedReferenceV) {
  // Row order of the reference V follows the interleaved basis listing.
  const auto pv = matmul(permutation_matrix({0, 2, 1, 3}), reference_v());
  const auto target = pv.transpose();
  const auto gates = recognize_kronecker_rotations(target);
  ASSERT_TRUE(gates);
  EXPECT_LE(dense_residual(*gates, 2, target), 1e-12);
  // Multiply out the single-qubit gates acting on each wire.
  std::array<RealMatrix, 2> local{RealMatrix::identity(2), RealMatrix::identity(2)};
  const RealMatrix x{{0, 1}, {1, 0}};
  for (const auto& g : *gates) {
    if (const auto* r = std::get_if<Rot>(&g)) {
      local[r->target] = matmul(rot_matrix(r->theta), local[r->target]);
    } else {
      const auto& p = std::get<PauliX>(g);
      local[p.target] = matmul(x, local[p.target]);
    }
  }
  std::vector<double> cosines{std::abs(local[0](0, 0)), std::abs(local[1](0, 0))};
  std::sort(cosines.begin(), cosines.end());
  EXPECT_NEAR(cosines[0], 1 / std::sqrt(10.0), 1e-12);  // sine 3/sqrt(10)
  EXPECT_NEAR(cosines[1], 0.5, 1e-12);                  // sine sqrt(3)/2
}

TEST(KroneckerRotations, ReferenceVNeedsQubitSwap) {
  EXPECT_FALSE(recognize_kronecker_rotations(reference_v().transpose()));
  const std::vector<Qubit> targets{2, 3};
  const auto out = synthesize_orthogonal(reference_v().transpose(), targets);
  EXPECT_EQ(out.path, SynthPath::kKroneckerProduct);
  EXPECT_EQ(std::count_if(out.gates.begin(), out.gates.end(),
                          [](const Gate& g) { return std::holds_alternative<Swap>(g); }),
            1);
}

TEST(KroneckerRotations, RecoversProductAngles) {
  std::mt19937_64 rng(26);
  std::uniform_real_distribution<double> angle(-pi + 0.01, pi - 0.01);
  for (int trial = 0; trial < 20; ++trial) {
    const double a = angle(rng), b = angle(rng);
    const auto m = kron(rot_matrix(a), rot_matrix(b));
    const auto gates = recognize_kronecker_rotations(m);
    ASSERT_TRUE(gates);
    ASSERT_EQ(gates->size(), 2u);
    // R(a) (x) R(b) == R(a + pi) (x) R(b + pi), so the pair is fixed only up
    // to a joint half turn.
    std::array<double, 2> got{};
    for (const auto& g : *gates) got[std::get<Rot>(g).target] = std::get<Rot>(g).theta;
    auto wrap = [](double x) { return std::remainder(x, 2 * pi); };
    const double shift = std::abs(wrap(got[0] - a)) < 1e-9 ? 0.0 : pi;
    EXPECT_NEAR(std::abs(wrap(got[0] - a - shift)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(wrap(got[1] - b - shift)), 0.0, 1e-12);
  }
}

TEST(KroneckerRotations, CnotIsNotAProduct) {
  EXPECT_FALSE(recognize_kronecker_rotations(permutation_matrix({0, 1, 3, 2})));
}

TEST(KroneckerRotations, ReflectionFactors) {
  const RealMatrix refl{{1, 0}, {0, -1}};
  const auto m = kron(matmul(rot_matrix(0.4), refl), rot_matrix(1.3));
  const auto gates = recognize_kronecker_rotations(m);
  ASSERT_TRUE(gates);
  EXPECT_LE(dense_residual(*gates, 2, m), 1e-12);
}

TEST(Givens, SingleRotation) {
  const auto f = givens_decompose(rot_matrix(0.7));
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f[0].i, 0u);
  EXPECT_EQ(f[0].j, 1u);
  EXPECT_NEAR(f[0].theta, 0.7, 1e-15);
}

TEST(Givens, IdentityIsEmpty) { EXPECT_TRUE(givens_decompose(RealMatrix::identity(4)).empty()); }

RealMatrix rebuild(const std::vector<TwoLevelRotation>& f, std::size_t n) {
  RealMatrix acc = RealMatrix::identity(n);
  for (const auto& g : f) acc = matmul(two_level_matrix(g, n), acc);
  return acc;
}

TEST(Givens, RandomFourByFour) {
  std::mt19937_64 rng(27);
  for (int trial = 0; trial < 50; ++trial) {
    const auto m = oracle::random_special_orthogonal(4, rng);
    const auto f = givens_decompose(m);
    EXPECT_LE(f.size(), 6u);
    EXPECT_LE(max_abs_diff(rebuild(f, 4), m), 1e-10);
  }
}

TEST(Givens, FactorCountBound) {
  std::mt19937_64 rng(28);
  for (std::size_t n : {2u, 4u, 8u, 16u}) {
    const auto m = oracle::random_special_orthogonal(n, rng);
    const auto f = givens_decompose(m);
    EXPECT_LE(f.size(), n * (n - 1) / 2 + (n - 1));
    EXPECT_LE(max_abs_diff(rebuild(f, n), m), 1e-10);
  }
}

TEST(Givens, NegativePivots) {
  const RealMatrix m{{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}};
  EXPECT_LE(max_abs_diff(rebuild(givens_decompose(m), 3), m), 1e-15);
}

TEST(Givens, DeterminantMinusOneThrows) {
  EXPECT_THROW(givens_decompose(RealMatrix{{1, 0}, {0, -1}}), SynthesisError);
}

TEST(TwoLevelToGates, SingleQubit) {
  const std::vector<Qubit> t{2};
  EXPECT_EQ(two_level_to_gates(0, 1, 0.3, t), (std::vector<Gate>{Rot{0.3, 2}}));
}

TEST(TwoLevelToGates, ControlledPair) {
  const std::vector<Qubit> t{0, 1};
  const auto gates = two_level_to_gates(2, 3, 0.9, t);
  EXPECT_EQ(oracle::count_cnots(gates), 2u);
  EXPECT_EQ(gates.size(), 4u);
  EXPECT_LE(dense_residual(gates, 2, two_level_matrix({2, 3, 0.9}, 4)), 1e-12);
}

TEST(TwoLevelToGates, ZeroAngleIsIdentity) {
  const std::vector<Qubit> t{0, 1, 2};
  EXPECT_LE(dense_residual(two_level_to_gates(1, 6, 0.0, t), 3, RealMatrix::identity(8)), 1e-12);
}

TEST(TwoLevelToGates, AllPairsOnThreeQubits) {
  const std::vector<Qubit> t{0, 1, 2};
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      if (i == j) continue;
      const auto gates = two_level_to_gates(i, j, 0.61, t);
      EXPECT_LE(dense_residual(gates, 3, two_level_matrix({i, j, 0.61}, 8)), 1e-12)
          << i << "," << j;
    }
}

void expect_multiplexed(const std::vector<double>& angles, const std::vector<Gate>& gates,
                        std::size_t m) {
  const std::size_t width = m + 1;
  const auto u = oracle::circuit_matrix(gates, width);
  for (std::size_t ctrl = 0; ctrl < angles.size(); ++ctrl) {
    const std::size_t in = ctrl << 1;
    EXPECT_NEAR(u(in, in), std::cos(angles[ctrl]), 1e-10) << "branch " << ctrl;
    EXPECT_NEAR(u(in | 1, in), std::sin(angles[ctrl]), 1e-10) << "branch " << ctrl;
  }
}

TEST(Multiplexed, EqualAnglesActLikePlainRotation) {
  const std::vector<Qubit> controls{0};
  const std::vector<double> angles{0.8, 0.8};
  const auto gates = multiplexed_rot(angles, controls, 1);
  const auto u = oracle::circuit_matrix(gates, 2);
  const auto ref = oracle::gate_matrix(Rot{0.8, 1}, 2);
  EXPECT_LE((u - ref).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Multiplexed, ControlledRotation) {
  const std::vector<Qubit> controls{0};
  const std::vector<double> angles{0.0, 1.2};
  const auto gates = multiplexed_rot(angles, controls, 1);
  expect_multiplexed(angles, gates, 1);
}

TEST(Multiplexed, TwoControlsRandom) {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> angle(-pi, pi);
  std::vector<double> angles(4);
  for (auto& a : angles) a = angle(rng);
  const std::vector<Qubit> controls{0, 1};
  const auto gates = multiplexed_rot(angles, controls, 2);
  EXPECT_EQ(oracle::count_cnots(gates), 4u);
  EXPECT_EQ(gates.size(), 8u);
  expect_multiplexed(angles, gates, 2);
}

TEST(Multiplexed, FourControls) {
  std::mt19937_64 rng(30);
  std::uniform_real_distribution<double> angle(-pi, pi);
  std::vector<double> angles(16);
  for (auto& a : angles) a = angle(rng);
  const std::vector<Qubit> controls{0, 1, 2, 3};
  const auto gates = multiplexed_rot(angles, controls, 4);
  EXPECT_EQ(oracle::count_cnots(gates), 16u);
  expect_multiplexed(angles, gates, 4);
}

TEST(Multiplexed, RejectsBadShapes) {
  const std::vector<Qubit> controls{0};
  const std::vector<double> three{0.1, 0.2, 0.3};
  EXPECT_THROW(multiplexed_rot(three, controls, 1), InvalidInput);
  EXPECT_THROW(multiplexed_rot(std::vector<double>{0.1}, std::vector<Qubit>{}, 1), InvalidInput);
}

TEST(ControlledRot, TwoControls) {
  const std::vector<Qubit> controls{0, 1};
  const auto gates = controlled_rot(0.5, controls, 2);
  const auto u = oracle::circuit_matrix(gates, 3);
  for (std::size_t in = 0; in < 8; in += 2) {
    const double c = in == 6 ? std::cos(0.5) : 1.0;
    const double s = in == 6 ? std::sin(0.5) : 0.0;
    EXPECT_NEAR(u(in, in), c, 1e-12);
    EXPECT_NEAR(u(in + 1, in), s, 1e-12);
  }
}

}  // namespace
}  // namespace schmidt
