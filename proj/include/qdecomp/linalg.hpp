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
#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qdecomp {

using Complex = std::complex<double>;

/// Unitarity tolerance applied to matrices coming from outside the library.
inline constexpr double kInputUnitaryTol = 1e-10;
/// Unitarity tolerance for matrices the library builds itself.
inline constexpr double kInternalUnitaryTol = 1e-12;
/// Largest supported register; dense storage caps out at 4096 x 4096.
inline constexpr unsigned kMaxQubits = 12;

/// Dense row-major complex matrix. Indices are 0-based.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> data);

  static Matrix identity(std::size_t dim);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex &operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<Complex> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Complex> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  std::span<Complex> data() noexcept { return data_; }
  std::span<const Complex> data() const noexcept { return data_; }

  Matrix adjoint() const;
  bool all_finite() const;

  friend bool operator==(const Matrix &, const Matrix &) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

Matrix operator*(const Matrix &a, const Matrix &b);

/// Largest entrywise modulus of a - b. Shapes must agree.
double max_abs_diff(const Matrix &a, const Matrix &b);

/// Largest entrywise modulus of m - I.
double distance_from_identity(const Matrix &m);

/// A 2x2 complex matrix [[m00, m01], [m10, m11]].
struct Mat2 {
  Complex m00{1.0, 0.0};
  Complex m01{};
  Complex m10{};
  Complex m11{1.0, 0.0};

  static Mat2 identity() { return {}; }

  Mat2 adjoint() const {
    return {std::conj(m00), std::conj(m10), std::conj(m01), std::conj(m11)};
  }
  Complex determinant() const { return m00 * m11 - m01 * m10; }
  /// Max-abs entry of V^dagger V - I.
  double unitarity_deviation() const;
  /// Max-abs entry of V - I.
  double distance_from_identity() const;

  std::array<Complex, 2> apply(Complex x, Complex y) const {
    return {m00 * x + m01 * y, m10 * x + m11 * y};
  }

  friend Mat2 operator*(const Mat2 &a, const Mat2 &b) {
    return {a.m00 * b.m00 + a.m01 * b.m10, a.m00 * b.m01 + a.m01 * b.m11,
            a.m10 * b.m00 + a.m11 * b.m10, a.m10 * b.m01 + a.m11 * b.m11};
  }
  friend bool operator==(const Mat2 &, const Mat2 &) = default;
};

/// Result of a unitarity test: the verdict plus the observed deviation.
struct UnitarityCheck {
  bool unitary = false;
  double deviation = 0.0;
};

/// Tests max |(M^dagger M - I)_ij| <= tol. Throws InvalidArgument on a
/// non-square or non-finite matrix.
UnitarityCheck check_unitary(const Matrix &m, double tol);

/// Square unitary matrix whose dimension is 2^n, 1 <= n <= kMaxQubits.
/// Validated once at construction and immutable afterwards.
class UnitaryMatrix {
public:
  /// Throws InvalidArgument for a bad shape or non-finite entries and
  /// NonUnitaryError when the deviation exceeds `tol`.
  explicit UnitaryMatrix(Matrix m, double tol = kInputUnitaryTol);

  static UnitaryMatrix identity(unsigned qubits);

  unsigned qubits() const noexcept { return qubits_; }
  std::size_t dim() const noexcept { return matrix_.rows(); }
  double deviation() const noexcept { return deviation_; }
  const Matrix &matrix() const noexcept { return matrix_; }
  const Complex &operator()(std::size_t r, std::size_t c) const { return matrix_(r, c); }

private:
  Matrix matrix_;
  unsigned qubits_ = 0;
  double deviation_ = 0.0;
};

/// Which component of V * (a, b)^T the rotation must annihilate. `First`
/// is the row whose target bit is 0, `Second` the row whose target bit is 1.
enum class ZeroSlot { First, Second };

/// Builds the 2x2 unitary that zeros the selected component of (a, b) and
/// leaves r = sqrt(|a|^2 + |b|^2) (real, nonnegative) in the other one.
///
///   zero second: V = [[conj(a), conj(b)], [-b, a]] / r
///   zero first:  V = [[b, -a], [conj(a), conj(b)]] / r
///
/// Both have determinant 1. Throws InvalidArgument when a = b = 0.
Mat2 givens_for_pair(Complex a, Complex b, ZeroSlot zero_slot);

/// Haar-distributed unitary on n qubits, deterministic in `seed`.
/// QR of a complex Ginibre matrix with the R diagonal phases folded into Q.
UnitaryMatrix haar_random_unitary(unsigned qubits, std::uint64_t seed);

/// Haar-distributed 2x2 unitary.
Mat2 haar_random_mat2(std::uint64_t seed);

} // namespace qdecomp
