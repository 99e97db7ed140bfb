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
#include <initializer_list>
#include <span>
#include <vector>

namespace schmidt {

/// Dense real matrix, row-major.
class RealMatrix {
 public:
  RealMatrix() = default;
  /// Zero-filled rows x cols matrix. Both dimensions must be positive.
  RealMatrix(std::size_t rows, std::size_t cols);
  /// Takes ownership of row-major data; throws InvalidInput on a size
  /// mismatch or any non-finite entry.
  RealMatrix(std::size_t rows, std::size_t cols, std::vector<double> data);
  RealMatrix(std::initializer_list<std::initializer_list<double>> rows);

  static RealMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  double operator()(std::size_t r, std::size_t c) const noexcept {
    return data_[r * cols_ + c];
  }
  double& operator()(std::size_t r, std::size_t c) noexcept {
    return data_[r * cols_ + c];
  }

  std::span<const double> data() const noexcept { return data_; }
  std::span<const double> row(std::size_t r) const noexcept {
    return {data_.data() + r * cols_, cols_};
  }
  std::vector<double> column(std::size_t c) const;

  RealMatrix transpose() const;
  bool all_finite() const noexcept;

  friend bool operator==(const RealMatrix&, const RealMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

RealMatrix matmul(const RealMatrix& a, const RealMatrix& b);

/// Largest entrywise |a - b|; throws InvalidInput on shape mismatch.
double max_abs_diff(const RealMatrix& a, const RealMatrix& b);

/// max |(m^T m - I)_ij|, i.e. how far the columns are from orthonormal.
double orthogonality_defect(const RealMatrix& m);

/// Determinant by partial-pivot LU. Square matrices only.
double determinant(const RealMatrix& m);

/// Thin wrapper over a descending, nonnegative singular-value list plus both
/// orthogonal factors. a = u * diag(sigma) * v^T.
struct SvdResult {
  RealMatrix u;               // rows x rows
  std::vector<double> sigma;  // min(rows, cols), descending
  RealMatrix v;               // cols x cols

  /// u * diag(sigma) * v^T, sized like the original input.
  RealMatrix reconstruct() const;
};

/// One-sided (Hestenes) Jacobi SVD.
///
/// Sweeps over column pairs of the taller orientation until every
/// off-diagonal Gram entry is below 1e-14 relative to the pair's norms (at
/// most 60 sweeps). Singular values come out sorted descending. Columns of u
/// are sign-canonical: the largest-magnitude entry is nonnegative, ties going
/// to the lowest row, and the paired column of v carries the compensating
/// sign. Null-space columns are completed deterministically from the
/// standard basis, so the result is bit-for-bit reproducible.
///
/// Throws InvalidInput if any entry is non-finite.
SvdResult svd(const RealMatrix& a);

inline constexpr double kDefaultRankTolerance = 1e-12;

/// Number of sigma[i] strictly above rel_tol * sigma[0]; zero when sigma is
/// empty or sigma[0] == 0.
std::size_t rank_with_tolerance(std::span<const double> sigma,
                                double rel_tol = kDefaultRankTolerance);

}  // namespace schmidt
