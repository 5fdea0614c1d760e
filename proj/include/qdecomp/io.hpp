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

// Text formats.
//
// Matrix file:
//   line 1     n
//   next 2^n   one matrix row per line, 2^n entries "re,im" separated by
//              whitespace (scientific notation accepted)
//
// Decomposition record file:
//   qdecomp-decomposition 1
//   n <qubits>
//   slots <N(N-1)/2>
//   skipped <count>
//   residual <max-abs deviation>
//   gates <count>
//   <step> <row> <col> <pattern> <v11> <v12> <v21> <v22>     (one per gate)
//
// Schedule file:
//   qdecomp-schedule 1
//   n <qubits>
//   entries <count>
//   <step> <row> <col> <pattern>                            (one per slot)
//
// Doubles are written with 17 significant digits so they read back exactly.

#include <iosfwd>
#include <string>

#include "qdecomp/decompose.hpp"
#include "qdecomp/linalg.hpp"
#include "qdecomp/scheme.hpp"

namespace qdecomp {

std::string format_double(double x);
std::string format_complex(Complex z);
/// Parses "re,im". Throws InvalidArgument.
Complex parse_complex(const std::string &token);

struct MatrixFile {
  unsigned qubits = 0;
  Matrix matrix;
};

/// Throws InvalidArgument on any shape or syntax problem. Unitarity is not
/// checked here.
MatrixFile read_matrix_file(std::istream &in);
void write_matrix_file(std::ostream &out, const Matrix &m);

void write_schedule(std::ostream &out, const Schedule &s);

void write_decomposition(std::ostream &out, const Decomposition &d);
/// Throws InvalidArgument on malformed records or non-unitary gate blocks.
Decomposition read_decomposition(std::istream &in);

} // namespace qdecomp
