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

// Dense kernels shared by the library. Each OpenMP kernel has a serial
// twin in `kernels::serial` that is kept as the reference in tests and as
// the baseline in the benchmark.

#include <span>

#include "qdecomp/gates.hpp"
#include "qdecomp/linalg.hpp"

namespace qdecomp::kernels {

/// For each pair (lo, hi): rows lo, hi of m <- v * rows lo, hi.
void apply_pairs(const Mat2 &v, std::span<const RowPair> pairs, Matrix &m);

/// Dense product a * b.
Matrix multiply(const Matrix &a, const Matrix &b);

/// max |(M^dagger M - I)_ij| for square m.
double gram_deviation(const Matrix &m);

namespace serial {

void apply_pairs(const Mat2 &v, std::span<const RowPair> pairs, Matrix &m,
                 const qdecomp::serial::RowWriteObserver &on_write = {});
Matrix multiply(const Matrix &a, const Matrix &b);
double gram_deviation(const Matrix &m);

} // namespace serial

} // namespace qdecomp::kernels
