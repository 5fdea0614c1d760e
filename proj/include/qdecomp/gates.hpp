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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "qdecomp/linalg.hpp"

namespace qdecomp {

/// One position of a controlled-gate word.
enum class GateSymbol : std::uint8_t {
  Zero,   // '0': control on |0>
  One,    // '1': control on |1>
  Free,   // '*': unconstrained
  Target, // 'V': the qubit the 2x2 unitary acts on
};

char to_char(GateSymbol s);

/// Longest pattern that can be represented (bit masks are 32 wide).
inline constexpr unsigned kMaxPatternQubits = 32;

/// Control word (c_n ... c_1) with exactly one Target.
///
/// Positions are 1-based and counted from the right: position 1 is c_1, the
/// least-significant bit of a row label, and position n is the leftmost
/// character of the rendered string. Stored as bit masks so that a full
/// 12-qubit schedule (8.4M entries) stays compact.
class GatePattern {
public:
  /// Builds from symbols listed left to right (c_n first). Throws
  /// InvalidArgument unless exactly one symbol is Target.
  explicit GatePattern(const std::vector<GateSymbol> &symbols_msb_first);

  unsigned qubits() const noexcept { return qubits_; }
  /// 1-based target position t; the row pairing stride is 2^(t-1).
  unsigned target() const noexcept { return target_; }
  std::uint32_t target_bit() const noexcept { return std::uint32_t{1} << (target_ - 1); }
  /// Bits of the row label fixed by a 0/1 control.
  std::uint32_t control_mask() const noexcept { return control_mask_; }
  /// Required values of the controlled bits (subset of control_mask()).
  std::uint32_t control_value() const noexcept { return control_value_; }

  GateSymbol at(unsigned position) const;
  unsigned control_count() const noexcept;

  /// True when the 0-based row label matches every 0/1 control.
  bool matches(std::uint32_t label) const noexcept {
    return (label & control_mask_) == control_value_;
  }

  /// New pattern of length n + 1 with `s` in the new leftmost position.
  GatePattern with_prefix(GateSymbol s) const;
  /// Copy with position `position` replaced by `s` (s must not be Target).
  GatePattern with_symbol(unsigned position, GateSymbol s) const;

  std::vector<GateSymbol> symbols() const;
  std::string to_string() const;

  friend bool operator==(const GatePattern &, const GatePattern &) = default;

private:
  GatePattern() = default;

  std::uint8_t qubits_ = 0;
  std::uint8_t target_ = 0;
  std::uint32_t control_mask_ = 0;
  std::uint32_t control_value_ = 0;
};

/// Parses a rendered pattern such as "10V*". Throws InvalidArgument on an
/// illegal character, an empty string, or anything but one 'V'.
GatePattern parse_pattern(std::string_view s);

/// Rows touched by one matched slot of a gate, 1-based; `lo` has target bit 0.
struct RowPair {
  std::size_t lo = 0;
  std::size_t hi = 0;

  friend bool operator==(const RowPair &, const RowPair &) = default;
};

/// Every row pair on which the gate acts, sorted by `lo`.
/// There are 2^(n - 1 - control_count) of them.
std::vector<RowPair> matched_row_pairs(const GatePattern &p);

/// A pattern bound to a concrete 2x2 unitary.
class ControlledGate {
public:
  /// Throws NonUnitaryError if v is not unitary within kInternalUnitaryTol.
  ControlledGate(GatePattern pattern, const Mat2 &v);

  const GatePattern &pattern() const noexcept { return pattern_; }
  const Mat2 &v() const noexcept { return v_; }
  unsigned qubits() const noexcept { return pattern_.qubits(); }

  ControlledGate adjoint() const { return {pattern_, v_.adjoint()}; }

private:
  GatePattern pattern_;
  Mat2 v_;
};

/// Dense 2^n x 2^n matrix of the gate, I_N + V_n (x) ... (x) V_1 with
/// V_i = |0><0|, |1><1|, V - I or I for '0', '1', 'V', '*'. Evaluated
/// entrywise from the tensor formula; meant as a test oracle, never used on
/// the decomposition path.
Matrix expand_gate(const ControlledGate &g);

/// M <- G M, touching only the matched row pairs. OpenMP-parallel; the
/// result does not depend on the thread count.
void apply_gate_left(const ControlledGate &g, Matrix &m);

namespace serial {

/// Called with the 0-based index of every row the kernel writes.
using RowWriteObserver = std::function<void(std::size_t)>;

/// Single-threaded reference for apply_gate_left.
void apply_gate_left(const ControlledGate &g, Matrix &m,
                     const RowWriteObserver &on_write = {});

} // namespace serial

} // namespace qdecomp
