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
#include "qdecomp/decompose.hpp"

#include <cmath>
#include <optional>
#include <string>

#include "qdecomp/error.hpp"

namespace qdecomp {

std::size_t Decomposition::total_controls() const noexcept {
  std::size_t total = 0;
  for (const DecomposedGate &g : gates) {
    total += g.gate.pattern().control_count();
  }
  return total;
}

namespace {

Mat2 inverse(const Mat2 &m) {
  const Complex det = m.determinant();
  return {m.m11 / det, -m.m01 / det, -m.m10 / det, m.m00 / det};
}

} // namespace

Decomposition decompose(const UnitaryMatrix &u, const DecomposeOptions &opts,
                        const StepObserver &observer) {
  if (u.deviation() > opts.input_tol) {
    throw NonUnitaryError("decompose: input deviates from unitary by " +
                              std::to_string(u.deviation()),
                          u.deviation());
  }
  const unsigned n = u.qubits();
  const auto entries = generate_schedule(n).entries();

  Decomposition d;
  d.qubits = n;
  d.gates.reserve(entries.size());
  Matrix work = u.matrix();

  for (std::size_t i = 0; i < entries.size(); ++i) {
    const ScheduleEntry &e = entries[i];
    const GatePattern &p = e.pattern;
    const std::size_t r0 = e.row - 1U;
    const std::size_t c0 = e.col - 1U;
    const std::size_t lo = r0 & ~std::size_t{p.target_bit()};
    const std::size_t hi = r0 | p.target_bit();
    if (!p.matches(static_cast<std::uint32_t>(lo))) {
      throw Error("schedule step " + std::to_string(e.step) + ": row " + std::to_string(e.row) +
                  " is not reachable by pattern " + p.to_string());
    }
    const bool last = i + 1 == entries.size();
    const bool column_final = last || entries[i + 1].col != e.col;
    const Complex a = work(lo, c0);
    const Complex b = work(hi, c0);
    const ZeroSlot slot = r0 == lo ? ZeroSlot::First : ZeroSlot::Second;

    std::optional<Mat2> v;
    if (last) {
      // Everything but the trailing 2x2 block is already I; undo it exactly.
      const Mat2 block{work(lo, lo), work(lo, hi), work(hi, lo), work(hi, hi)};
      v = inverse(block);
      if (v->distance_from_identity() <= opts.skip_tol) {
        v.reset();
      }
    } else if (column_final) {
      if (std::hypot(std::abs(a), std::abs(b)) > 0.0) {
        v = givens_for_pair(a, b, slot);
        if (v->distance_from_identity() <= opts.skip_tol) {
          v.reset();
        }
      }
    } else if (std::abs(slot == ZeroSlot::First ? a : b) > opts.skip_tol) {
      v = givens_for_pair(a, b, slot);
    }

    if (v) {
      ControlledGate gate(p, *v);
      apply_gate_left(gate, work);
      d.gates.push_back({e.step, e.row, e.col, std::move(gate)});
    } else if (opts.keep_identity_gates) {
      d.gates.push_back({e.step, e.row, e.col, ControlledGate(p, Mat2::identity())});
    } else {
      ++d.skipped;
    }
    if (observer) {
      observer(e, v.has_value(), work);
    }
  }

  d.residual = distance_from_identity(work);
  if (!(d.residual <= opts.residual_tol)) {
    throw ResidualError("decompose: U_r...U_1 U misses the identity by " +
                            std::to_string(d.residual),
                        d.residual);
  }
  return d;
}

Matrix reconstruct(const Decomposition &d) {
  Matrix m = Matrix::identity(std::size_t{1} << d.qubits);
  for (auto it = d.gates.rbegin(); it != d.gates.rend(); ++it) {
    apply_gate_left(it->gate.adjoint(), m);
  }
  return m;
}

VerifyReport verify(const Decomposition &d, const UnitaryMatrix &u, double tol) {
  if (d.qubits != u.qubits()) {
    throw InvalidArgument("verify: decomposition is for " + std::to_string(d.qubits) +
                          " qubits, matrix has " + std::to_string(u.qubits()));
  }
  Matrix work = u.matrix();
  for (const DecomposedGate &g : d.gates) {
    apply_gate_left(g.gate, work);
  }
  VerifyReport report;
  report.deviation = distance_from_identity(work);
  report.passed = report.deviation <= tol;
  return report;
}

} // namespace qdecomp
