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

// Symbolic recurrence schedule: which entry of which column is annihilated
// at each step, and by which controlled-gate pattern. Everything here is
// pure combinatorics on row labels; no floating point is involved.
//
// Conventions: rows and columns are 1-based. The label of index k is the
// n-bit expansion of k - 1, so k = sum_j k_j 2^(j-1) + 1 with k_1 the least
// significant bit, matching pattern position 1.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qdecomp/gates.hpp"

namespace qdecomp {

/// A 1-based index together with its n-bit label.
struct IndexBits {
  std::size_t value = 1;
  unsigned qubits = 1;

  std::size_t label() const noexcept { return value - 1; }
  bool bit(unsigned position) const noexcept { return (label() >> (position - 1)) & 1U; }
  /// Label rendered most-significant bit first, e.g. "101" for value 6, n = 3.
  std::string to_string() const;
};

/// Index whose label is the bitwise XOR of the labels of a and l.
/// Throws InvalidArgument if the qubit counts differ.
IndexBits xor_index(IndexBits a, IndexBits l);

/// Same operation on bare 1-based indices.
constexpr std::size_t xor_index(std::size_t a, std::size_t l) noexcept {
  return ((a - 1) ^ (l - 1)) + 1;
}

/// Lifts a column-1 gate of the (n-1)-qubit scheme to n qubits: the new
/// leftmost symbol is '1' when the word has no 1-control, '*' otherwise.
/// Throws InvalidArgument if the input contains a 0-control.
GatePattern lift_gate(const GatePattern &c);

/// Rewrites a lifted column-1 lower-half gate for column l,
/// 2 <= l <= 2^(n-1). With 2^(m-1) < l <= 2^m: the leftmost symbol becomes
/// '1' if none of positions n..m+1 holds a 1-control, and any 1-control at a
/// position j <= m where bit j of label(l) is set becomes a 0-control.
GatePattern adapt_gate(const GatePattern &c, std::size_t column);

/// Gate that annihilates (2^(n-1) + l, l) against the diagonal: 'V' in
/// position n, then '1' where label(l) has a 1 and '*' where it has a 0.
GatePattern final_gate(std::size_t column, unsigned qubits);

/// Rows of the lower half of column 1, in elimination order, for n >= 2.
std::vector<std::size_t> column1_lower_order(unsigned qubits);

/// Which part of the recursion produced an entry; used for gate-count
/// breakdowns.
enum class Region : std::uint8_t {
  UpperLeft,   // upper half of columns 1..N/2, from the (n-1) scheme
  LowerLeft,   // lower half of columns 1..N/2, lifted/adapted column-1 gates
  ColumnFinal, // the (N/2 + l, l) entry of column l <= N/2
  LowerRight,  // columns N/2+1..N-1, the shifted (n-1) scheme
};

/// One elimination step. Fields are narrow so that n = 12 fits in memory.
struct ScheduleEntry {
  std::uint32_t step = 0; // 1-based global ordinal, column-major
  std::uint16_t row = 0;
  std::uint16_t col = 0;
  GatePattern pattern;
  Region region = Region::ColumnFinal;
};

/// The full ordered schedule for n qubits, N(N-1)/2 entries grouped by
/// column 1..N-1.
class Schedule {
public:
  Schedule(unsigned qubits, std::vector<ScheduleEntry> entries);

  unsigned qubits() const noexcept { return qubits_; }
  std::size_t dim() const noexcept { return std::size_t{1} << qubits_; }
  std::span<const ScheduleEntry> entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }

  /// Entries of column l (1-based), in order.
  std::span<const ScheduleEntry> column(std::size_t l) const;

private:
  unsigned qubits_;
  std::vector<ScheduleEntry> entries_;
  std::vector<std::size_t> column_start_; // size N, column_start_[l-1]
};

/// The recurrence schedule for 1 <= n <= 12. Built once per n and cached;
/// concurrent callers share the same object.
const Schedule &generate_schedule(unsigned qubits);

/// Number of slots in an n-qubit schedule, 2^(n-1) (2^n - 1).
constexpr std::size_t schedule_size(unsigned qubits) noexcept {
  return (std::size_t{1} << (qubits - 1)) * ((std::size_t{1} << qubits) - 1);
}

} // namespace qdecomp
