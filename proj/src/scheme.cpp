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
#include "qdecomp/scheme.hpp"

#include <array>
#include <bit>
#include <memory>
#include <mutex>
#include <string>

#include "qdecomp/error.hpp"
#include "qdecomp/linalg.hpp"

namespace qdecomp {

std::string IndexBits::to_string() const {
  std::string s;
  s.reserve(qubits);
  for (unsigned position = qubits; position >= 1; --position) {
    s.push_back(bit(position) ? '1' : '0');
  }
  return s;
}

IndexBits xor_index(IndexBits a, IndexBits l) {
  if (a.qubits != l.qubits) {
    throw InvalidArgument("xor_index: labels have different lengths");
  }
  return {xor_index(a.value, l.value), a.qubits};
}

GatePattern lift_gate(const GatePattern &c) {
  if ((c.control_mask() & ~c.control_value()) != 0) {
    throw InvalidArgument("lift_gate: column-1 gates carry no 0-control, got " + c.to_string());
  }
  return c.with_prefix(c.control_value() == 0 ? GateSymbol::One : GateSymbol::Free);
}

GatePattern adapt_gate(const GatePattern &c, std::size_t column) {
  const unsigned n = c.qubits();
  const std::size_t half = std::size_t{1} << (n - 1);
  if (n < 2 || column < 2 || column > half) {
    throw InvalidArgument("adapt_gate: column " + std::to_string(column) +
                          " outside [2, 2^(n-1)] for n = " + std::to_string(n));
  }
  const unsigned m = static_cast<unsigned>(std::bit_width(column - 1));
  const std::uint32_t low_mask = (std::uint32_t{1} << m) - 1;
  const std::uint32_t label = static_cast<std::uint32_t>(column - 1);

  GatePattern out = c;
  if ((c.control_value() & ~low_mask) == 0) {
    out = out.with_symbol(n, GateSymbol::One);
  }
  const std::uint32_t flip = c.control_value() & label & low_mask;
  for (unsigned position = 1; position <= m; ++position) {
    if ((flip >> (position - 1)) & 1U) {
      out = out.with_symbol(position, GateSymbol::Zero);
    }
  }
  return out;
}

GatePattern final_gate(std::size_t column, unsigned qubits) {
  if (qubits < 1 || qubits > kMaxPatternQubits) {
    throw InvalidArgument("final_gate: bad qubit count");
  }
  const std::size_t half = std::size_t{1} << (qubits - 1);
  if (column < 1 || column > half) {
    throw InvalidArgument("final_gate: column " + std::to_string(column) +
                          " outside [1, 2^(n-1)]");
  }
  std::vector<GateSymbol> syms;
  syms.reserve(qubits);
  syms.push_back(GateSymbol::Target);
  for (unsigned position = qubits - 1; position >= 1; --position) {
    const bool set = ((column - 1) >> (position - 1)) & 1U;
    syms.push_back(set ? GateSymbol::One : GateSymbol::Free);
  }
  return GatePattern(syms);
}

std::vector<std::size_t> column1_lower_order(unsigned qubits) {
  if (qubits < 2 || qubits > kMaxQubits) {
    throw InvalidArgument("column1_lower_order: n must be in [2, " +
                          std::to_string(kMaxQubits) + "]");
  }
  const std::size_t half = std::size_t{1} << (qubits - 1);
  std::vector<std::size_t> rows;
  rows.reserve(half);
  for (const ScheduleEntry &e : generate_schedule(qubits - 1).column(1)) {
    rows.push_back(e.row + half);
  }
  rows.push_back(half + 1);
  return rows;
}

Schedule::Schedule(unsigned qubits, std::vector<ScheduleEntry> entries)
    : qubits_(qubits), entries_(std::move(entries)) {
  const std::size_t dim = std::size_t{1} << qubits_;
  column_start_.assign(dim, entries_.size());
  std::size_t prev_col = 0;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const std::size_t col = entries_[i].col;
    if (col < prev_col || col < 1 || col >= dim) {
      throw InvalidArgument("schedule entries are not grouped by column");
    }
    if (col != prev_col) {
      column_start_[col - 1] = i;
      prev_col = col;
    }
  }
  // Columns without entries start where the next one does.
  for (std::size_t c = dim - 1; c-- > 0;) {
    column_start_[c] = std::min(column_start_[c], column_start_[c + 1]);
  }
}

std::span<const ScheduleEntry> Schedule::column(std::size_t l) const {
  const std::size_t dim = this->dim();
  if (l < 1 || l >= dim) {
    throw InvalidArgument("column " + std::to_string(l) + " outside [1, N-1]");
  }
  const std::size_t begin = column_start_[l - 1];
  const std::size_t end = l + 1 < dim ? column_start_[l] : entries_.size();
  return std::span<const ScheduleEntry>(entries_).subspan(begin, end - begin);
}

namespace {

Schedule build_schedule(unsigned n) {
  std::vector<ScheduleEntry> out;
  out.reserve(schedule_size(n));
  auto push = [&out](std::size_t row, std::size_t col, const GatePattern &p, Region region) {
    out.push_back({static_cast<std::uint32_t>(out.size() + 1), static_cast<std::uint16_t>(row),
                   static_cast<std::uint16_t>(col), p, region});
  };

  if (n == 1) {
    push(2, 1, parse_pattern("V"), Region::ColumnFinal);
    return Schedule(n, std::move(out));
  }

  const Schedule &prev = generate_schedule(n - 1);
  const std::size_t half = std::size_t{1} << (n - 1);

  // Column 1 of the (n-1) scheme drives the lower half of every column <= N/2.
  const auto col1 = prev.column(1);
  std::vector<std::size_t> lower_rows;
  std::vector<GatePattern> lifted;
  lower_rows.reserve(col1.size());
  lifted.reserve(col1.size());
  for (const ScheduleEntry &e : col1) {
    lower_rows.push_back(e.row + half);
    lifted.push_back(lift_gate(e.pattern));
  }

  for (std::size_t l = 1; l <= half; ++l) {
    if (l < half) {
      for (const ScheduleEntry &e : prev.column(l)) {
        push(e.row, l, e.pattern.with_prefix(GateSymbol::Free), Region::UpperLeft);
      }
    }
    for (std::size_t i = 0; i < lifted.size(); ++i) {
      const GatePattern p = l == 1 ? lifted[i] : adapt_gate(lifted[i], l);
      push(xor_index(lower_rows[i], l), l, p, Region::LowerLeft);
    }
    push(half + l, l, final_gate(l, n), Region::ColumnFinal);
  }

  for (const ScheduleEntry &e : prev.entries()) {
    push(e.row + half, e.col + half, e.pattern.with_prefix(GateSymbol::One), Region::LowerRight);
  }
  return Schedule(n, std::move(out));
}

} // namespace

const Schedule &generate_schedule(unsigned qubits) {
  if (qubits < 1 || qubits > kMaxQubits) {
    throw InvalidArgument("generate_schedule: n must be in [1, " + std::to_string(kMaxQubits) +
                          "], got " + std::to_string(qubits));
  }
  static std::array<std::once_flag, kMaxQubits + 1> once;
  static std::array<std::unique_ptr<const Schedule>, kMaxQubits + 1> cache;
  std::call_once(once[qubits], [qubits] {
    cache[qubits] = std::make_unique<const Schedule>(build_schedule(qubits));
  });
  return *cache[qubits];
}

} // namespace qdecomp
