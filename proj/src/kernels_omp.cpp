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
#include <algorithm>
#include <cmath>
#include <vector>

#include "qdecomp/error.hpp"
#include "qdecomp/kernels.hpp"

namespace qdecomp::kernels {

namespace {

constexpr std::size_t kParallelThreshold = 1 << 14;
constexpr std::ptrdiff_t kColumnBlock = 64;

} // namespace

void apply_pairs(const Mat2 &v, std::span<const RowPair> pairs, Matrix &m) {
  const std::ptrdiff_t npairs = static_cast<std::ptrdiff_t>(pairs.size());
  const std::ptrdiff_t ncols = static_cast<std::ptrdiff_t>(m.cols());
  const std::ptrdiff_t nblocks = (ncols + kColumnBlock - 1) / kColumnBlock;
  const bool parallel = pairs.size() * m.cols() >= kParallelThreshold;
  Complex *data = m.data().data();
  const Complex a = v.m00, b = v.m01, c = v.m10, d = v.m11;
#pragma omp parallel for collapse(2) schedule(static) if (parallel)
  for (std::ptrdiff_t p = 0; p < npairs; ++p) {
    for (std::ptrdiff_t blk = 0; blk < nblocks; ++blk) {
      Complex *x = data + static_cast<std::ptrdiff_t>(pairs[p].lo - 1) * ncols;
      Complex *y = data + static_cast<std::ptrdiff_t>(pairs[p].hi - 1) * ncols;
      const std::ptrdiff_t end = std::min(ncols, (blk + 1) * kColumnBlock);
      for (std::ptrdiff_t j = blk * kColumnBlock; j < end; ++j) {
        const Complex xj = x[j];
        const Complex yj = y[j];
        x[j] = a * xj + b * yj;
        y[j] = c * xj + d * yj;
      }
    }
  }
}

Matrix multiply(const Matrix &a, const Matrix &b) {
  if (a.cols() != b.rows()) {
    throw InvalidArgument("multiply: inner dimensions differ");
  }
  Matrix out(a.rows(), b.cols());
  const std::ptrdiff_t rows = static_cast<std::ptrdiff_t>(a.rows());
  const std::size_t inner = a.cols();
  const std::size_t cols = b.cols();
  const bool parallel = a.rows() * inner * cols >= kParallelThreshold;
  const Complex *pa = a.data().data();
  const Complex *pb = b.data().data();
  Complex *po = out.data().data();
#pragma omp parallel for schedule(static) if (parallel)
  for (std::ptrdiff_t i = 0; i < rows; ++i) {
    Complex *dst = po + static_cast<std::size_t>(i) * cols;
    for (std::size_t k = 0; k < inner; ++k) {
      const Complex aik = pa[static_cast<std::size_t>(i) * inner + k];
      const Complex *src = pb + k * cols;
      for (std::size_t j = 0; j < cols; ++j) {
        dst[j] += aik * src[j];
      }
    }
  }
  return out;
}

double gram_deviation(const Matrix &m) {
  const std::size_t dim = m.rows();
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(dim);
  const bool parallel = dim * dim * dim >= kParallelThreshold;
  const Complex *pm = m.data().data();
  double worst = 0.0;
#pragma omp parallel if (parallel) reduction(max : worst)
  {
    std::vector<Complex> gram_row(dim);
    Complex *g = gram_row.data();
#pragma omp for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      std::fill(gram_row.begin(), gram_row.end(), Complex{});
      for (std::size_t k = 0; k < dim; ++k) {
        const Complex aki = std::conj(pm[k * dim + static_cast<std::size_t>(i)]);
        const Complex *src = pm + k * dim;
        for (std::size_t j = 0; j < dim; ++j) {
          g[j] += aki * src[j];
        }
      }
      g[i] -= 1.0;
      for (std::size_t j = 0; j < dim; ++j) {
        worst = std::max(worst, std::abs(g[j]));
      }
    }
  }
  return worst;
}

} // namespace qdecomp::kernels
