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

#include "qdecomp/error.hpp"
#include "qdecomp/kernels.hpp"

namespace qdecomp::kernels::serial {

void apply_pairs(const Mat2 &v, std::span<const RowPair> pairs, Matrix &m,
                 const qdecomp::serial::RowWriteObserver &on_write) {
  for (const RowPair &p : pairs) {
    auto x = m.row(p.lo - 1);
    auto y = m.row(p.hi - 1);
    if (on_write) {
      on_write(p.lo - 1);
      on_write(p.hi - 1);
    }
    for (std::size_t c = 0; c < x.size(); ++c) {
      const auto [nx, ny] = v.apply(x[c], y[c]);
      x[c] = nx;
      y[c] = ny;
    }
  }
}

Matrix multiply(const Matrix &a, const Matrix &b) {
  if (a.cols() != b.rows()) {
    throw InvalidArgument("multiply: inner dimensions differ");
  }
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Complex acc{};
      for (std::size_t k = 0; k < a.cols(); ++k) {
        acc += a(i, k) * b(k, j);
      }
      out(i, j) = acc;
    }
  }
  return out;
}

double gram_deviation(const Matrix &m) {
  const std::size_t dim = m.rows();
  double worst = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      Complex acc{};
      for (std::size_t k = 0; k < dim; ++k) {
        acc += std::conj(m(k, i)) * m(k, j);
      }
      if (i == j) {
        acc -= 1.0;
      }
      worst = std::max(worst, std::abs(acc));
    }
  }
  return worst;
}

} // namespace qdecomp::kernels::serial
