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

#include "schmidt/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

#include "schmidt/errors.hpp"

namespace schmidt {

RealMatrix::RealMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {
  if (rows == 0 || cols == 0) {
    throw InvalidInput("matrix dimensions must be positive");
  }
}

RealMatrix::RealMatrix(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (rows == 0 || cols == 0) {
    throw InvalidInput("matrix dimensions must be positive");
  }
  if (data_.size() != rows * cols) {
    throw InvalidInput("matrix data has " + std::to_string(data_.size()) +
                       " entries, expected " + std::to_string(rows * cols));
  }
  if (!all_finite()) throw InvalidInput("matrix has non-finite entries");
}

RealMatrix::RealMatrix(std::initializer_list<std::initializer_list<double>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  if (rows_ == 0 || cols_ == 0) {
    throw InvalidInput("matrix dimensions must be positive");
  }
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InvalidInput("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
  if (!all_finite()) throw InvalidInput("matrix has non-finite entries");
}

RealMatrix RealMatrix::identity(std::size_t n) {
  RealMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

std::vector<double> RealMatrix::column(std::size_t c) const {
  std::vector<double> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

RealMatrix RealMatrix::transpose() const {
  RealMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool RealMatrix::all_finite() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](double x) { return std::isfinite(x); });
}

RealMatrix matmul(const RealMatrix& a, const RealMatrix& b) {
  if (a.cols() != b.rows()) {
    throw InvalidInput("matmul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                       " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  RealMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

double max_abs_diff(const RealMatrix& a, const RealMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InvalidInput("max_abs_diff: shape mismatch");
  }
  double worst = 0.0;
  auto da = a.data();
  auto db = b.data();
  for (std::size_t i = 0; i < da.size(); ++i) worst = std::max(worst, std::abs(da[i] - db[i]));
  return worst;
}

double orthogonality_defect(const RealMatrix& m) {
  double worst = 0.0;
  for (std::size_t i = 0; i < m.cols(); ++i) {
    for (std::size_t j = i; j < m.cols(); ++j) {
      double dot = 0.0;
      for (std::size_t r = 0; r < m.rows(); ++r) dot += m(r, i) * m(r, j);
      worst = std::max(worst, std::abs(dot - (i == j ? 1.0 : 0.0)));
    }
  }
  return worst;
}

double determinant(const RealMatrix& m) {
  if (!m.square()) throw InvalidInput("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  RealMatrix lu = m;
  double det = 1.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(lu(r, c)) > std::abs(lu(piv, c))) piv = r;
    if (lu(piv, c) == 0.0) return 0.0;
    if (piv != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(lu(c, k), lu(piv, k));
      det = -det;
    }
    det *= lu(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      const double f = lu(r, c) / lu(c, c);
      for (std::size_t k = c; k < n; ++k) lu(r, k) -= f * lu(c, k);
    }
  }
  return det;
}

RealMatrix SvdResult::reconstruct() const {
  RealMatrix us(u.rows(), v.rows());
  for (std::size_t r = 0; r < u.rows(); ++r)
    for (std::size_t k = 0; k < sigma.size(); ++k) us(r, k) = u(r, k) * sigma[k];
  return matmul(us, v.transpose());
}

namespace {

constexpr double kJacobiTolerance = 1e-14;
constexpr int kMaxSweeps = 60;

using Column = std::vector<double>;

double dot(const Column& a, const Column& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Remove the components of `v` along each basis column, twice for stability.
void project_out(Column& v, const std::vector<Column>& basis) {
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& b : basis) {
      const double d = dot(v, b);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= d * b[i];
    }
  }
}

// Unit vector orthogonal to `basis`, taken from the standard basis vector
// with the largest residual (first one on ties). For orthonormal `basis` the
// residual of e_i has squared norm 1 - sum_b b_i^2.
Column complete_from_standard_basis(std::size_t dim, const std::vector<Column>& basis) {
  std::vector<double> covered(dim, 0.0);
  for (const auto& b : basis)
    for (std::size_t i = 0; i < dim; ++i) covered[i] += b[i] * b[i];
  std::size_t pick = 0;
  double best = -1.0;
  for (std::size_t i = 0; i < dim; ++i) {
    const double n = std::sqrt(std::max(0.0, 1.0 - covered[i]));
    if (n > best + 1e-12) {
      best = n;
      pick = i;
    }
  }
  Column e(dim, 0.0);
  e[pick] = 1.0;
  project_out(e, basis);
  const double n = std::sqrt(dot(e, e));
  for (double& x : e) x /= n;
  return e;
}

struct TallSvd {
  std::vector<Column> u;  // m columns of length m
  std::vector<double> sigma;
  std::vector<Column> v;  // n columns of length n
};

// a.rows() >= a.cols().
TallSvd jacobi_tall(const RealMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  std::vector<Column> w(n, Column(m));
  std::vector<Column> v(n, Column(n, 0.0));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) w[j][i] = a(i, j);
    v[j][j] = 1.0;
  }

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double alpha = dot(w[p], w[p]);
        const double beta = dot(w[q], w[q]);
        const double gamma = dot(w[p], w[q]);
        if (gamma == 0.0 || std::abs(gamma) <= kJacobiTolerance * std::sqrt(alpha * beta)) {
          continue;
        }
        rotated = true;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::hypot(1.0, zeta));
        const double c = 1.0 / std::hypot(1.0, t);
        const double s = c * t;
        for (std::size_t i = 0; i < m; ++i) {
          const double wp = w[p][i];
          const double wq = w[q][i];
          w[p][i] = c * wp - s * wq;
          w[q][i] = s * wp + c * wq;
        }
        for (std::size_t i = 0; i < n; ++i) {
          const double vp = v[p][i];
          const double vq = v[q][i];
          v[p][i] = c * vp - s * vq;
          v[q][i] = s * vp + c * vq;
        }
      }
    }
    if (!rotated) break;
  }

  std::vector<double> norms(n);
  for (std::size_t j = 0; j < n; ++j) norms[j] = std::sqrt(dot(w[j], w[j]));
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return norms[x] > norms[y]; });

  TallSvd out;
  out.sigma.reserve(n);
  const double sigma_max = n == 0 ? 0.0 : norms[order[0]];
  // Columns this small carry only rounding noise; their direction is rebuilt.
  const double negligible = sigma_max * static_cast<double>(m) *
                            std::numeric_limits<double>::epsilon();
  for (std::size_t j : order) {
    out.sigma.push_back(norms[j]);
    out.v.push_back(v[j]);
    Column u(m, 0.0);
    if (norms[j] > negligible) {
      for (std::size_t i = 0; i < m; ++i) u[i] = w[j][i] / norms[j];
      project_out(u, out.u);
      const double len = std::sqrt(dot(u, u));
      if (len > 0.5) {
        for (double& x : u) x /= len;
      } else {
        u = complete_from_standard_basis(m, out.u);
      }
    } else {
      u = complete_from_standard_basis(m, out.u);
    }
    out.u.push_back(std::move(u));
  }
  while (out.u.size() < m) out.u.push_back(complete_from_standard_basis(m, out.u));
  return out;
}

// Index of the largest-magnitude entry, lowest index on ties.
std::size_t dominant_index(const Column& c) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < c.size(); ++i)
    if (std::abs(c[i]) > std::abs(c[best])) best = i;
  return best;
}

void negate(Column& c) {
  for (double& x : c) x = -x;
}

RealMatrix from_columns(const std::vector<Column>& cols) {
  const std::size_t n = cols.size();
  RealMatrix m(cols.front().size(), n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = cols[j][i];
  return m;
}

}  // namespace

SvdResult svd(const RealMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) throw InvalidInput("svd of an empty matrix");
  if (!a.all_finite()) throw InvalidInput("svd: matrix has non-finite entries");

  const bool wide = a.rows() < a.cols();
  TallSvd t = jacobi_tall(wide ? a.transpose() : a);
  std::vector<Column>& u = wide ? t.v : t.u;
  std::vector<Column>& v = wide ? t.u : t.v;
  const std::size_t k = t.sigma.size();

  for (std::size_t j = 0; j < u.size(); ++j) {
    if (u[j][dominant_index(u[j])] < 0.0) {
      negate(u[j]);
      if (j < k) negate(v[j]);
    }
  }
  for (std::size_t j = k; j < v.size(); ++j) {
    if (v[j][dominant_index(v[j])] < 0.0) negate(v[j]);
  }
  return SvdResult{from_columns(u), std::move(t.sigma), from_columns(v)};
}

std::size_t rank_with_tolerance(std::span<const double> sigma, double rel_tol) {
  if (sigma.empty() || sigma[0] == 0.0) return 0;
  const double cut = rel_tol * sigma[0];
  return static_cast<std::size_t>(
      std::count_if(sigma.begin(), sigma.end(), [cut](double s) { return s > cut; }));
}

}  // namespace schmidt
