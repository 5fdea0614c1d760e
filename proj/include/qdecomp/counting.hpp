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

// Exact gate-count tables for the recurrence scheme and for the Gray-code
// scheme it is compared against. All arithmetic is arbitrary precision.

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qdecomp {

using Count = boost::multiprecision::cpp_int;

inline constexpr unsigned kMaxCountQubits = 50;

/// g[k] is the number of k-controlled gates, k = 0..n-1.
struct CountVector {
  unsigned qubits = 0;
  std::vector<Count> g;

  Count sum() const;
  /// Space-separated entries, e.g. "5 180 242 60 9".
  std::string to_string() const;

  friend bool operator==(const CountVector &, const CountVector &) = default;
};

/// Split of g_n^k by the schedule region that produced the gates.
struct BreakdownRow {
  Count upper_left;   // A
  Count lower_left;   // B
  Count column_final; // C
  Count lower_right;  // D

  Count total() const { return upper_left + lower_left + column_final + lower_right; }
  friend bool operator==(const BreakdownRow &, const BreakdownRow &) = default;
};

struct CountBreakdown {
  unsigned qubits = 0;
  std::vector<BreakdownRow> rows; // indexed by k
};

struct ComparisonRow {
  unsigned qubits = 0;
  Count t1; // this scheme, sum_k k g_n^k
  Count t2; // Gray-code scheme
  Count diff; // t2 - t1
};

/// Closed forms and recursion for 1 <= n <= 50:
///   g^0 = n;  g^(n-1) = 1, 4, n + 4 for n = 1, 2, >= 3;
///   g^k = g_(n-1)^k + g_(n-1)^(k-1) + C(n-1, k) for 3 <= k < n-1;
///   k = 1, 2 follow the same split plus the lower-left term
///   B^1 = 2^(n-3)(n+2)(n-1), B^1 + B^2 = 2^(n-1)(2^(n-1) - 1).
CountVector count_scheme(unsigned qubits);

/// Histogram of control counts over generate_schedule(n), 1 <= n <= 12.
CountVector count_scheme_from_schedule(unsigned qubits);

/// A/B/C/D split read off the schedule regions, 2 <= n <= 12.
CountBreakdown count_breakdown(unsigned qubits);

/// 2^(n-3)(n+2)(n-1) for n >= 3.
Count b1_closed_form(unsigned qubits);

/// n(n-1)(2^(n-2) + 1), n >= 2.
Count g1_closed_form(unsigned qubits);

/// (4^n - 4)/3 - 2^n (n-1) + n(n-1)(n-2)/2, n >= 3.
Count g2_closed_form(unsigned qubits);

/// Gray-code scheme counts, 1 <= n <= 50:
///   g^0 = 2^(n-1), and for 1 <= k <= n-1
///   g^k = g_(n-1)^k + g_(n-1)^(k-1) + max(2^(n-2), 2^k) + 2^(2n-k-2) - 2^(n-2)
/// with g_(n-1)^(n-1) = 0.
CountVector count_gray(unsigned qubits);

/// sum_k k g^k.
Count total_controls(const CountVector &v);

/// sum_k w_k g^k. `weights` must have at least v.g.size() entries.
Count weighted_total(const CountVector &v, std::span<const Count> weights);

/// Rows n = 1..n_max, n_max <= 50.
std::vector<ComparisonRow> compare_series(unsigned n_max);

/// Writes "n,T1,T2,diff" and one line per row.
void write_comparison_csv(std::ostream &out, std::span<const ComparisonRow> rows);

/// Exact binomial coefficient.
Count binomial(unsigned n, unsigned k);

} // namespace qdecomp
