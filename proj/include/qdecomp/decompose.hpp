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
#include <functional>
#include <vector>

#include "qdecomp/gates.hpp"
#include "qdecomp/linalg.hpp"
#include "qdecomp/scheme.hpp"

namespace qdecomp {

struct DecomposeOptions {
  /// A non-final slot whose entry is already at most this large is skipped.
  /// A column-final slot is skipped when its rotation is this close to I.
  double skip_tol = 1e-14;
  /// Record identity gates for skipped slots instead of dropping them.
  bool keep_identity_gates = false;
  /// Unitarity tolerance for the input.
  double input_tol = kInputUnitaryTol;
  /// decompose() throws ResidualError if U_r...U_1 U misses I by more.
  double residual_tol = 1e-9;
};

/// A gate emitted by decompose(), tagged with the schedule slot it came from.
struct DecomposedGate {
  std::size_t step = 0;
  std::size_t row = 0;
  std::size_t col = 0;
  ControlledGate gate;
};

/// U_r ... U_1 U = I, with the U_i in application order.
struct Decomposition {
  unsigned qubits = 0;
  std::vector<DecomposedGate> gates;
  std::size_t skipped = 0;
  /// max |U_r ... U_1 U - I| observed on the work matrix.
  double residual = 0.0;

  std::size_t slots() const noexcept { return gates.size() + skipped; }
  /// Sum of control counts over the recorded gates.
  std::size_t total_controls() const noexcept;
};

/// Invoked after every schedule slot with the work matrix as it stands;
/// `applied` is false for skipped slots.
using StepObserver =
    std::function<void(const ScheduleEntry &entry, bool applied, const Matrix &work)>;

/// Walks the recurrence schedule against U. Every slot annihilates its
/// entry with a determinant-1 Givens rotation on the pivot pair (the row
/// with the target bit flipped), which leaves each diagonal pivot real and
/// positive. The very last slot, (N, N-1), uses the inverse of the trailing
/// 2x2 block so that the leftover determinant phase is absorbed and the
/// product lands on I exactly.
///
/// Throws NonUnitaryError for bad input and ResidualError when the final
/// work matrix misses I by more than opts.residual_tol.
Decomposition decompose(const UnitaryMatrix &u, const DecomposeOptions &opts = {},
                        const StepObserver &observer = {});

/// U_1^dagger ... U_r^dagger, built by applying the daggers to I.
Matrix reconstruct(const Decomposition &d);

struct VerifyReport {
  double deviation = 0.0;
  bool passed = false;
};

/// Applies U_1, ..., U_r to U in order and measures the distance from I.
/// Throws InvalidArgument if the qubit counts differ.
VerifyReport verify(const Decomposition &d, const UnitaryMatrix &u, double tol);

} // namespace qdecomp
