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
#include "qdecomp/gates.hpp"

#include <bit>
#include <string>

#include "qdecomp/error.hpp"
#include "qdecomp/kernels.hpp"

namespace qdecomp {

char to_char(GateSymbol s) {
  switch (s) {
  case GateSymbol::Zero:
    return '0';
  case GateSymbol::One:
    return '1';
  case GateSymbol::Free:
    return '*';
  case GateSymbol::Target:
    return 'V';
  }
  return '?';
}

GatePattern::GatePattern(const std::vector<GateSymbol> &symbols_msb_first) {
  const std::size_t n = symbols_msb_first.size();
  if (n == 0 || n > kMaxPatternQubits) {
    throw InvalidArgument("gate pattern length must be in [1, " +
                          std::to_string(kMaxPatternQubits) + "]");
  }
  qubits_ = static_cast<std::uint8_t>(n);
  unsigned targets = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const unsigned position = static_cast<unsigned>(n - i);
    const std::uint32_t bit = std::uint32_t{1} << (position - 1);
    switch (symbols_msb_first[i]) {
    case GateSymbol::Zero:
      control_mask_ |= bit;
      break;
    case GateSymbol::One:
      control_mask_ |= bit;
      control_value_ |= bit;
      break;
    case GateSymbol::Free:
      break;
    case GateSymbol::Target:
      target_ = static_cast<std::uint8_t>(position);
      ++targets;
      break;
    }
  }
  if (targets != 1) {
    throw InvalidArgument("gate pattern needs exactly one 'V', found " +
                          std::to_string(targets));
  }
}

GateSymbol GatePattern::at(unsigned position) const {
  if (position < 1 || position > qubits_) {
    throw InvalidArgument("pattern position " + std::to_string(position) + " out of range");
  }
  if (position == target_) {
    return GateSymbol::Target;
  }
  const std::uint32_t bit = std::uint32_t{1} << (position - 1);
  if ((control_mask_ & bit) == 0) {
    return GateSymbol::Free;
  }
  return (control_value_ & bit) != 0 ? GateSymbol::One : GateSymbol::Zero;
}

unsigned GatePattern::control_count() const noexcept {
  return static_cast<unsigned>(std::popcount(control_mask_));
}

GatePattern GatePattern::with_prefix(GateSymbol s) const {
  if (qubits_ >= kMaxPatternQubits) {
    throw InvalidArgument("gate pattern would exceed the maximum length");
  }
  GatePattern out = *this;
  out.qubits_ = static_cast<std::uint8_t>(qubits_ + 1);
  const std::uint32_t bit = std::uint32_t{1} << qubits_;
  switch (s) {
  case GateSymbol::Zero:
    out.control_mask_ |= bit;
    break;
  case GateSymbol::One:
    out.control_mask_ |= bit;
    out.control_value_ |= bit;
    break;
  case GateSymbol::Free:
    break;
  case GateSymbol::Target:
    throw InvalidArgument("gate pattern already has a target");
  }
  return out;
}

GatePattern GatePattern::with_symbol(unsigned position, GateSymbol s) const {
  if (position < 1 || position > qubits_) {
    throw InvalidArgument("pattern position " + std::to_string(position) + " out of range");
  }
  if (s == GateSymbol::Target || position == target_) {
    throw InvalidArgument("with_symbol cannot move or add the target");
  }
  GatePattern out = *this;
  const std::uint32_t bit = std::uint32_t{1} << (position - 1);
  out.control_mask_ &= ~bit;
  out.control_value_ &= ~bit;
  if (s != GateSymbol::Free) {
    out.control_mask_ |= bit;
  }
  if (s == GateSymbol::One) {
    out.control_value_ |= bit;
  }
  return out;
}

std::vector<GateSymbol> GatePattern::symbols() const {
  std::vector<GateSymbol> out;
  out.reserve(qubits_);
  for (unsigned position = qubits_; position >= 1; --position) {
    out.push_back(at(position));
  }
  return out;
}

std::string GatePattern::to_string() const {
  std::string s;
  s.reserve(qubits_);
  for (unsigned position = qubits_; position >= 1; --position) {
    s.push_back(to_char(at(position)));
  }
  return s;
}

GatePattern parse_pattern(std::string_view s) {
  std::vector<GateSymbol> syms;
  syms.reserve(s.size());
  for (char ch : s) {
    switch (ch) {
    case '0':
      syms.push_back(GateSymbol::Zero);
      break;
    case '1':
      syms.push_back(GateSymbol::One);
      break;
    case '*':
      syms.push_back(GateSymbol::Free);
      break;
    case 'V':
      syms.push_back(GateSymbol::Target);
      break;
    default:
      throw InvalidArgument("illegal character '" + std::string(1, ch) +
                            "' in gate pattern \"" + std::string(s) + "\"");
    }
  }
  return GatePattern(syms);
}

std::vector<RowPair> matched_row_pairs(const GatePattern &p) {
  const std::uint32_t all = p.qubits() >= 32 ? ~std::uint32_t{0}
                                             : (std::uint32_t{1} << p.qubits()) - 1;
  const std::uint32_t free_mask = all & ~(p.control_mask() | p.target_bit());
  std::vector<RowPair> pairs;
  pairs.reserve(std::size_t{1} << std::popcount(free_mask));
  // Enumerate subsets of free_mask in increasing order.
  std::uint32_t sub = 0;
  do {
    const std::size_t lo = (sub | p.control_value());
    pairs.push_back({lo + 1, (lo | p.target_bit()) + 1});
    sub = (sub - free_mask) & free_mask;
  } while (sub != 0);
  return pairs;
}

ControlledGate::ControlledGate(GatePattern pattern, const Mat2 &v)
    : pattern_(pattern), v_(v) {
  const double dev = v.unitarity_deviation();
  if (!(dev <= kInternalUnitaryTol)) {
    throw NonUnitaryError("controlled gate " + pattern.to_string() +
                              " carries a non-unitary 2x2 block",
                          dev);
  }
}

Matrix expand_gate(const ControlledGate &g) {
  const GatePattern &p = g.pattern();
  const unsigned n = p.qubits();
  const std::size_t dim = std::size_t{1} << n;
  const Mat2 &v = g.v();
  const Complex vm[2][2] = {{v.m00 - 1.0, v.m01}, {v.m10, v.m11 - 1.0}};

  // Entry (r, c) of V_n (x) ... (x) V_1 is the product over positions of
  // the factor's (bit_j(r), bit_j(c)) entry.
  auto factor = [&](unsigned position, unsigned rb, unsigned cb) -> Complex {
    switch (p.at(position)) {
    case GateSymbol::Zero:
      return (rb == 0 && cb == 0) ? 1.0 : 0.0;
    case GateSymbol::One:
      return (rb == 1 && cb == 1) ? 1.0 : 0.0;
    case GateSymbol::Free:
      return rb == cb ? 1.0 : 0.0;
    case GateSymbol::Target:
      return vm[rb][cb];
    }
    return 0.0;
  };

  Matrix out = Matrix::identity(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      Complex term = 1.0;
      for (unsigned position = 1; position <= n && term != 0.0; ++position) {
        term *= factor(position, (r >> (position - 1)) & 1U, (c >> (position - 1)) & 1U);
      }
      out(r, c) += term;
    }
  }
  return out;
}

namespace {

void check_dims(const ControlledGate &g, const Matrix &m) {
  const std::size_t dim = std::size_t{1} << g.qubits();
  if (m.rows() != dim) {
    throw InvalidArgument("gate on " + std::to_string(g.qubits()) + " qubits applied to a " +
                          std::to_string(m.rows()) + "-row matrix");
  }
}

} // namespace

void apply_gate_left(const ControlledGate &g, Matrix &m) {
  check_dims(g, m);
  const auto pairs = matched_row_pairs(g.pattern());
  kernels::apply_pairs(g.v(), pairs, m);
}

namespace serial {

void apply_gate_left(const ControlledGate &g, Matrix &m, const RowWriteObserver &on_write) {
  check_dims(g, m);
  const auto pairs = matched_row_pairs(g.pattern());
  kernels::serial::apply_pairs(g.v(), pairs, m, on_write);
}

} // namespace serial

} // namespace qdecomp
