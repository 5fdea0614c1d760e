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
#include "qdecomp/counting.hpp"

#include <algorithm>
#include <array>
#include <ostream>
#include <string>

#include "qdecomp/error.hpp"
#include "qdecomp/scheme.hpp"

namespace qdecomp {

namespace {

Count pow2(unsigned e) { return Count(1) << e; }

void check_count_range(unsigned n, unsigned lo, unsigned hi, const char *who) {
  if (n < lo || n > hi) {
    throw InvalidArgument(std::string(who) + ": n must be in [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "], got " + std::to_string(n));
  }
}

// Lower-left one-control count; (n+2)(n-1) 2^(n-3), written so n = 2 stays integral.
Count lower_left_one_control(unsigned n) {
  return Count(n + 2) * Count(n - 1) * pow2(n) / 8;
}

using Table = std::array<std::vector<Count>, kMaxCountQubits + 1>;

Table build_scheme_table() {
  Table g;
  g[1] = {1};
  for (unsigned n = 2; n <= kMaxCountQubits; ++n) {
    const auto &prev = g[n - 1];
    auto at = [&prev](unsigned k) { return k < prev.size() ? prev[k] : Count(0); };
    std::vector<Count> row(n);
    for (unsigned k = 0; k < n; ++k) {
      if (k == 0) {
        row[k] = n;
      } else if (k == n - 1) {
        row[k] = n == 2 ? Count(4) : Count(n + 4);
      } else if (k >= 3) {
        row[k] = at(k) + at(k - 1) + binomial(n - 1, k);
      } else {
        // k = 1 or 2: upper-left + lower-right + final gates + lower-left.
        const Count b1 = lower_left_one_control(n);
        const Count lower_left = k == 1 ? b1 : pow2(n - 1) * (pow2(n - 1) - 1) - b1;
        row[k] = at(k) + at(k - 1) + binomial(n - 1, k) + lower_left;
      }
    }
    g[n] = std::move(row);
  }
  return g;
}

Table build_gray_table() {
  Table g;
  g[1] = {1};
  for (unsigned n = 2; n <= kMaxCountQubits; ++n) {
    const auto &prev = g[n - 1];
    auto at = [&prev](unsigned k) { return k < prev.size() ? prev[k] : Count(0); };
    std::vector<Count> row(n);
    row[0] = pow2(n - 1);
    for (unsigned k = 1; k < n; ++k) {
      row[k] = at(k) + at(k - 1) + std::max(pow2(n - 2), pow2(k)) + pow2(2 * n - k - 2) -
               pow2(n - 2);
    }
    g[n] = std::move(row);
  }
  return g;
}

const Table &scheme_table() {
  static const Table table = build_scheme_table();
  return table;
}

const Table &gray_table() {
  static const Table table = build_gray_table();
  return table;
}

} // namespace

Count CountVector::sum() const {
  Count s = 0;
  for (const Count &x : g) {
    s += x;
  }
  return s;
}

std::string CountVector::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (k != 0) {
      s.push_back(' ');
    }
    s += g[k].str();
  }
  return s;
}

Count binomial(unsigned n, unsigned k) {
  if (k > n) {
    return 0;
  }
  k = std::min(k, n - k);
  Count c = 1;
  for (unsigned i = 1; i <= k; ++i) {
    c = c * (n - k + i) / i;
  }
  return c;
}

CountVector count_scheme(unsigned qubits) {
  check_count_range(qubits, 1, kMaxCountQubits, "count_scheme");
  return {qubits, scheme_table()[qubits]};
}

CountVector count_scheme_from_schedule(unsigned qubits) {
  check_count_range(qubits, 1, kMaxQubits, "count_scheme_from_schedule");
  std::vector<std::size_t> hist(qubits, 0);
  for (const ScheduleEntry &e : generate_schedule(qubits).entries()) {
    ++hist[e.pattern.control_count()];
  }
  CountVector v{qubits, {}};
  v.g.assign(hist.begin(), hist.end());
  return v;
}

CountBreakdown count_breakdown(unsigned qubits) {
  check_count_range(qubits, 2, kMaxQubits, "count_breakdown");
  std::vector<std::array<std::size_t, 4>> hist(qubits, {0, 0, 0, 0});
  for (const ScheduleEntry &e : generate_schedule(qubits).entries()) {
    ++hist[e.pattern.control_count()][static_cast<std::size_t>(e.region)];
  }
  CountBreakdown out{qubits, {}};
  out.rows.reserve(qubits);
  for (const auto &h : hist) {
    out.rows.push_back({h[static_cast<std::size_t>(Region::UpperLeft)],
                        h[static_cast<std::size_t>(Region::LowerLeft)],
                        h[static_cast<std::size_t>(Region::ColumnFinal)],
                        h[static_cast<std::size_t>(Region::LowerRight)]});
  }
  return out;
}

Count b1_closed_form(unsigned qubits) {
  check_count_range(qubits, 3, kMaxCountQubits, "b1_closed_form");
  return pow2(qubits - 3) * (qubits + 2) * (qubits - 1);
}

Count g1_closed_form(unsigned qubits) {
  check_count_range(qubits, 2, kMaxCountQubits, "g1_closed_form");
  return Count(qubits) * (qubits - 1) * (pow2(qubits - 2) + 1);
}

Count g2_closed_form(unsigned qubits) {
  check_count_range(qubits, 3, kMaxCountQubits, "g2_closed_form");
  const Count n = qubits;
  return (pow2(2 * qubits) - 4) / 3 - pow2(qubits) * (n - 1) + n * (n - 1) * (n - 2) / 2;
}

CountVector count_gray(unsigned qubits) {
  check_count_range(qubits, 1, kMaxCountQubits, "count_gray");
  return {qubits, gray_table()[qubits]};
}

Count total_controls(const CountVector &v) {
  Count t = 0;
  for (std::size_t k = 0; k < v.g.size(); ++k) {
    t += v.g[k] * k;
  }
  return t;
}

Count weighted_total(const CountVector &v, std::span<const Count> weights) {
  if (weights.size() < v.g.size()) {
    throw InvalidArgument("weighted_total: need one weight per control count");
  }
  Count t = 0;
  for (std::size_t k = 0; k < v.g.size(); ++k) {
    t += v.g[k] * weights[k];
  }
  return t;
}

std::vector<ComparisonRow> compare_series(unsigned n_max) {
  check_count_range(n_max, 1, kMaxCountQubits, "compare_series");
  std::vector<ComparisonRow> rows;
  rows.reserve(n_max);
  for (unsigned n = 1; n <= n_max; ++n) {
    ComparisonRow r;
    r.qubits = n;
    r.t1 = total_controls(count_scheme(n));
    r.t2 = total_controls(count_gray(n));
    r.diff = r.t2 - r.t1;
    rows.push_back(std::move(r));
  }
  return rows;
}

void write_comparison_csv(std::ostream &out, std::span<const ComparisonRow> rows) {
  out << "n,T1,T2,diff\n";
  for (const ComparisonRow &r : rows) {
    out << r.qubits << ',' << r.t1.str() << ',' << r.t2.str() << ',' << r.diff.str() << '\n';
  }
}

} // namespace qdecomp
