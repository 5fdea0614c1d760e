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
#include "qdecomp/io.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "qdecomp/error.hpp"

namespace qdecomp {

namespace {

constexpr const char *kDecompositionMagic = "qdecomp-decomposition";
constexpr const char *kScheduleMagic = "qdecomp-schedule";
constexpr int kFormatVersion = 1;

double parse_double(std::string_view s) {
  double x = 0.0;
  const char *first = s.data();
  const char *last = s.data() + s.size();
  if (!s.empty() && *first == '+') {
    ++first;
  }
  const auto [ptr, ec] = std::from_chars(first, last, x);
  if (ec != std::errc{} || ptr != last) {
    throw InvalidArgument("not a number: \"" + std::string(s) + "\"");
  }
  return x;
}

std::size_t parse_size(const std::string &s) {
  std::size_t x = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw InvalidArgument("not a non-negative integer: \"" + s + "\"");
  }
  return x;
}

std::vector<std::string> split_ws(const std::string &line) {
  std::istringstream ss(line);
  std::vector<std::string> tokens;
  std::string tok;
  while (ss >> tok) {
    tokens.push_back(tok);
  }
  return tokens;
}

// Next line with any non-blank content; false at end of input.
bool next_content_line(std::istream &in, std::string &line) {
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) {
      return true;
    }
  }
  return false;
}

std::string expect_key(std::istream &in, const std::string &key) {
  std::string line;
  if (!next_content_line(in, line)) {
    throw InvalidArgument("unexpected end of file, wanted \"" + key + "\"");
  }
  const auto tokens = split_ws(line);
  if (tokens.size() != 2 || tokens[0] != key) {
    throw InvalidArgument("expected \"" + key + " <value>\", got \"" + line + "\"");
  }
  return tokens[1];
}

unsigned checked_qubits(std::size_t n) {
  if (n < 1 || n > kMaxQubits) {
    throw InvalidArgument("qubit count must be in [1, " + std::to_string(kMaxQubits) +
                          "], got " + std::to_string(n));
  }
  return static_cast<unsigned>(n);
}

} // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_complex(Complex z) {
  return format_double(z.real()) + "," + format_double(z.imag());
}

Complex parse_complex(const std::string &token) {
  const auto comma = token.find(',');
  if (comma == std::string::npos || token.find(',', comma + 1) != std::string::npos) {
    throw InvalidArgument("expected \"re,im\", got \"" + token + "\"");
  }
  const std::string_view view(token);
  return {parse_double(view.substr(0, comma)), parse_double(view.substr(comma + 1))};
}

MatrixFile read_matrix_file(std::istream &in) {
  std::string line;
  if (!next_content_line(in, line)) {
    throw InvalidArgument("matrix file is empty");
  }
  const auto head = split_ws(line);
  if (head.size() != 1) {
    throw InvalidArgument("first line must hold the qubit count alone");
  }
  MatrixFile file;
  file.qubits = checked_qubits(parse_size(head[0]));
  const std::size_t dim = std::size_t{1} << file.qubits;
  file.matrix = Matrix(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    if (!next_content_line(in, line)) {
      throw InvalidArgument("matrix file has " + std::to_string(r) + " rows, expected " +
                            std::to_string(dim));
    }
    const auto tokens = split_ws(line);
    if (tokens.size() != dim) {
      throw InvalidArgument("row " + std::to_string(r + 1) + " has " +
                            std::to_string(tokens.size()) + " entries, expected " +
                            std::to_string(dim));
    }
    for (std::size_t c = 0; c < dim; ++c) {
      file.matrix(r, c) = parse_complex(tokens[c]);
    }
  }
  if (next_content_line(in, line)) {
    throw InvalidArgument("trailing content after the last matrix row");
  }
  if (!file.matrix.all_finite()) {
    throw InvalidArgument("matrix file contains non-finite entries");
  }
  return file;
}

void write_matrix_file(std::ostream &out, const Matrix &m) {
  if (!m.is_square() || m.rows() < 2 || (m.rows() & (m.rows() - 1)) != 0) {
    throw InvalidArgument("write_matrix_file: matrix must be 2^n x 2^n");
  }
  unsigned n = 0;
  while ((std::size_t{1} << n) < m.rows()) {
    ++n;
  }
  out << n << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c != 0) {
        out << ' ';
      }
      out << format_complex(m(r, c));
    }
    out << '\n';
  }
}

void write_schedule(std::ostream &out, const Schedule &s) {
  out << kScheduleMagic << ' ' << kFormatVersion << '\n';
  out << "n " << s.qubits() << '\n';
  out << "entries " << s.size() << '\n';
  for (const ScheduleEntry &e : s.entries()) {
    out << e.step << ' ' << e.row << ' ' << e.col << ' ' << e.pattern.to_string() << '\n';
  }
}

void write_decomposition(std::ostream &out, const Decomposition &d) {
  out << kDecompositionMagic << ' ' << kFormatVersion << '\n';
  out << "n " << d.qubits << '\n';
  out << "slots " << d.slots() << '\n';
  out << "skipped " << d.skipped << '\n';
  out << "residual " << format_double(d.residual) << '\n';
  out << "gates " << d.gates.size() << '\n';
  for (const DecomposedGate &g : d.gates) {
    const Mat2 &v = g.gate.v();
    out << g.step << ' ' << g.row << ' ' << g.col << ' ' << g.gate.pattern().to_string() << ' '
        << format_complex(v.m00) << ' ' << format_complex(v.m01) << ' '
        << format_complex(v.m10) << ' ' << format_complex(v.m11) << '\n';
  }
}

Decomposition read_decomposition(std::istream &in) {
  std::string line;
  if (!next_content_line(in, line) ||
      split_ws(line) != std::vector<std::string>{kDecompositionMagic,
                                                 std::to_string(kFormatVersion)}) {
    throw InvalidArgument("not a decomposition record file (bad header)");
  }
  Decomposition d;
  d.qubits = checked_qubits(parse_size(expect_key(in, "n")));
  const std::size_t slots = parse_size(expect_key(in, "slots"));
  d.skipped = parse_size(expect_key(in, "skipped"));
  d.residual = parse_double(expect_key(in, "residual"));
  const std::size_t count = parse_size(expect_key(in, "gates"));
  if (slots != schedule_size(d.qubits) || count + d.skipped != slots) {
    throw InvalidArgument("decomposition header counts are inconsistent");
  }
  d.gates.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (!next_content_line(in, line)) {
      throw InvalidArgument("decomposition file ends after " + std::to_string(i) + " of " +
                            std::to_string(count) + " gates");
    }
    const auto t = split_ws(line);
    if (t.size() != 8) {
      throw InvalidArgument("gate record must have 8 fields: \"" + line + "\"");
    }
    const GatePattern p = parse_pattern(t[3]);
    if (p.qubits() != d.qubits) {
      throw InvalidArgument("gate pattern " + t[3] + " does not have " +
                            std::to_string(d.qubits) + " positions");
    }
    const Mat2 v{parse_complex(t[4]), parse_complex(t[5]), parse_complex(t[6]),
                 parse_complex(t[7])};
    try {
      d.gates.push_back({parse_size(t[0]), parse_size(t[1]), parse_size(t[2]),
                         ControlledGate(p, v)});
    } catch (const NonUnitaryError &e) {
      throw InvalidArgument(std::string("gate record ") + t[0] + ": " + e.what());
    }
  }
  if (next_content_line(in, line)) {
    throw InvalidArgument("trailing content after the last gate record");
  }
  return d;
}

} // namespace qdecomp
