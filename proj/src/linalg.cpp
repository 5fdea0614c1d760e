// Copyright 2026 The qdecomp Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "qdecomp/linalg.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <string>

#include <Eigen/Dense>

#include "qdecomp/error.hpp"
#include "qdecomp/kernels.hpp"

namespace qdecomp {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) {
    throw InvalidArgument("matrix data has " + std::to_string(data_.size()) +
                          " entries, expected " + std::to_string(rows * cols));
  }
}

Matrix Matrix::identity(std::size_t dim) {
  Matrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    m(i, i) = 1.0;
  }
  return m;
}

Matrix Matrix::adjoint() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      t(c, r) = std::conj((*this)(r, c));
    }
  }
  return t;
}

bool Matrix::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](const Complex &z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

Matrix operator*(const Matrix &a, const Matrix &b) { return kernels::multiply(a, b); }

double max_abs_diff(const Matrix &a, const Matrix &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InvalidArgument("max_abs_diff: shape mismatch");
  }
  double worst = 0.0;
  auto da = a.data();
  auto db = b.data();
  for (std::size_t i = 0; i < da.size(); ++i) {
    worst = std::max(worst, std::abs(da[i] - db[i]));
  }
  return worst;
}

double distance_from_identity(const Matrix &m) {
  double worst = 0.0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Complex expected = r == c ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(m(r, c) - expected));
    }
  }
  return worst;
}

double Mat2::unitarity_deviation() const {
  const Mat2 g = adjoint() * *this;
  return std::max({std::abs(g.m00 - 1.0), std::abs(g.m01), std::abs(g.m10),
                   std::abs(g.m11 - 1.0)});
}

double Mat2::distance_from_identity() const {
  return std::max({std::abs(m00 - 1.0), std::abs(m01), std::abs(m10), std::abs(m11 - 1.0)});
}

UnitarityCheck check_unitary(const Matrix &m, double tol) {
  if (!m.is_square()) {
    throw InvalidArgument("check_unitary: matrix is " + std::to_string(m.rows()) + "x" +
                          std::to_string(m.cols()) + ", not square");
  }
  if (!m.all_finite()) {
    throw InvalidArgument("check_unitary: matrix has non-finite entries");
  }
  const double dev = kernels::gram_deviation(m);
  return {dev <= tol, dev};
}

UnitaryMatrix::UnitaryMatrix(Matrix m, double tol) : matrix_(std::move(m)) {
  const std::size_t dim = matrix_.rows();
  if (!matrix_.is_square() || dim < 2 || !std::has_single_bit(dim)) {
    throw InvalidArgument("unitary matrix must be 2^n x 2^n with n >= 1, got " +
                          std::to_string(matrix_.rows()) + "x" +
                          std::to_string(matrix_.cols()));
  }
  qubits_ = static_cast<unsigned>(std::countr_zero(dim));
  if (qubits_ > kMaxQubits) {
    throw InvalidArgument("at most " + std::to_string(kMaxQubits) + " qubits supported");
  }
  const UnitarityCheck check = check_unitary(matrix_, tol);
  deviation_ = check.deviation;
  if (!check.unitary) {
    throw NonUnitaryError("matrix is not unitary: max |U^dagger U - I| = " +
                              std::to_string(check.deviation),
                          check.deviation);
  }
}

UnitaryMatrix UnitaryMatrix::identity(unsigned qubits) {
  return UnitaryMatrix(Matrix::identity(std::size_t{1} << qubits), kInternalUnitaryTol);
}

Mat2 givens_for_pair(Complex a, Complex b, ZeroSlot zero_slot) {
  const double r = std::hypot(std::abs(a), std::abs(b));
  if (r == 0.0) {
    throw InvalidArgument("givens_for_pair: nothing to eliminate");
  }
  a /= r;
  b /= r;
  if (zero_slot == ZeroSlot::Second) {
    return {std::conj(a), std::conj(b), -b, a};
  }
  return {b, -a, std::conj(a), std::conj(b)};
}

namespace {

Eigen::MatrixXcd ginibre_haar(Eigen::Index dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXcd z(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    for (Eigen::Index r = 0; r < dim; ++r) {
      const double re = normal(rng);
      const double im = normal(rng);
      z(r, c) = {re, im};
    }
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd &packed = qr.matrixQR();
  for (Eigen::Index c = 0; c < dim; ++c) {
    const Complex d = packed(c, c);
    const double mag = std::abs(d);
    if (mag > 0.0) {
      q.col(c) *= d / mag;
    }
  }
  return q;
}

} // namespace

UnitaryMatrix haar_random_unitary(unsigned qubits, std::uint64_t seed) {
  if (qubits < 1 || qubits > kMaxQubits) {
    throw InvalidArgument("haar_random_unitary: n must be in [1, " +
                          std::to_string(kMaxQubits) + "], got " + std::to_string(qubits));
  }
  const std::size_t dim = std::size_t{1} << qubits;
  const Eigen::MatrixXcd q = ginibre_haar(static_cast<Eigen::Index>(dim), seed);
  Matrix m(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      m(r, c) = q(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }
  }
  return UnitaryMatrix(std::move(m), kInternalUnitaryTol);
}

Mat2 haar_random_mat2(std::uint64_t seed) {
  const Eigen::MatrixXcd q = ginibre_haar(2, seed);
  return {q(0, 0), q(0, 1), q(1, 0), q(1, 1)};
}

} // namespace qdecomp
