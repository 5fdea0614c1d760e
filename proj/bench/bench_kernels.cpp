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

#include <random>

#include <benchmark/benchmark.h>

#include "qdecomp/decompose.hpp"
#include "qdecomp/gates.hpp"
#include "qdecomp/kernels.hpp"
#include "qdecomp/scheme.hpp"

namespace {

using namespace qdecomp;

Matrix random_matrix(std::size_t dim) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> normal;
  Matrix m(dim, dim);
  for (auto &z : m.data()) {
    const double re = normal(rng);
    z = {re, normal(rng)};
  }
  return m;
}

// Uncontrolled gate on the top qubit: N/2 pairs, the widest case.
std::vector<RowPair> widest_pairs(unsigned n) {
  return matched_row_pairs(parse_pattern("V" + std::string(n - 1, '*')));
}

void BM_ApplyPairs_Omp(benchmark::State &state) {
  const auto n = static_cast<unsigned>(state.range(0));
  Matrix m = random_matrix(std::size_t{1} << n);
  const auto pairs = widest_pairs(n);
  const Mat2 v = haar_random_mat2(1);
  for (auto _ : state) {
    kernels::apply_pairs(v, pairs, m);
    benchmark::DoNotOptimize(m.data().data());
  }
}

void BM_ApplyPairs_Serial(benchmark::State &state) {
  const auto n = static_cast<unsigned>(state.range(0));
  Matrix m = random_matrix(std::size_t{1} << n);
  const auto pairs = widest_pairs(n);
  const Mat2 v = haar_random_mat2(1);
  for (auto _ : state) {
    kernels::serial::apply_pairs(v, pairs, m);
    benchmark::DoNotOptimize(m.data().data());
  }
}

void BM_Multiply_Omp(benchmark::State &state) {
  const Matrix a = random_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::multiply(a, a));
  }
}

void BM_Multiply_Serial(benchmark::State &state) {
  const Matrix a = random_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::serial::multiply(a, a));
  }
}

void BM_GramDeviation_Omp(benchmark::State &state) {
  const Matrix a = random_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::gram_deviation(a));
  }
}

void BM_GramDeviation_Serial(benchmark::State &state) {
  const Matrix a = random_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::serial::gram_deviation(a));
  }
}

void BM_Decompose(benchmark::State &state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const UnitaryMatrix u = haar_random_unitary(n, 7);
  generate_schedule(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(decompose(u));
  }
}

BENCHMARK(BM_ApplyPairs_Omp)->DenseRange(6, 10, 2);
BENCHMARK(BM_ApplyPairs_Serial)->DenseRange(6, 10, 2);
BENCHMARK(BM_Multiply_Omp)->RangeMultiplier(4)->Range(64, 256);
BENCHMARK(BM_Multiply_Serial)->RangeMultiplier(4)->Range(64, 256);
BENCHMARK(BM_GramDeviation_Omp)->RangeMultiplier(4)->Range(64, 256);
BENCHMARK(BM_GramDeviation_Serial)->RangeMultiplier(4)->Range(64, 256);
BENCHMARK(BM_Decompose)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
