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

#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "golden_tables.hpp"
#include "qdecomp/counting.hpp"
#include "qdecomp/decompose.hpp"
#include "qdecomp/gates.hpp"
#include "qdecomp/scheme.hpp"
#include "test_util.hpp"

namespace qdecomp {
namespace {

using testing::GoldenEntry;

/// Accumulates the first failure message for a criterion.
struct Check {
  bool ok = true;
  std::string why;

  void expect(bool cond, const std::string &msg) {
    if (!cond && ok) {
      ok = false;
      why = msg;
    }
  }
};

Count pow2(unsigned e) { return Count(1) << e; }

CountVector vec(unsigned n, std::initializer_list<int> values) {
  CountVector v;
  v.qubits = n;
  for (int x : values) {
    v.g.emplace_back(x);
  }
  return v;
}

std::string entry_str(const ScheduleEntry &e) {
  return "(" + std::to_string(e.row) + "," + std::to_string(e.col) + "," + e.pattern.to_string() +
         ")";
}

void golden_tables(Check &c) {
  auto table = [&](unsigned n, const std::vector<GoldenEntry> &golden) {
    const auto entries = generate_schedule(n).entries();
    c.expect(entries.size() == golden.size(), "n=" + std::to_string(n) + " length");
    for (std::size_t i = 0; i < golden.size() && i < entries.size(); ++i) {
      const ScheduleEntry &e = entries[i];
      c.expect(e.row == golden[i].row && e.col == golden[i].col &&
                   e.pattern.to_string() == golden[i].pattern,
               "n=" + std::to_string(n) + " entry " + std::to_string(i + 1) + " is " +
                   entry_str(e));
    }
  };
  table(2, testing::kTwoQubitTable);
  table(3, testing::kThreeQubitTable);

  const Schedule &s4 = generate_schedule(4);
  for (const auto &golden : testing::kFourQubitLowerLeft) {
    std::vector<const ScheduleEntry *> lower;
    for (const ScheduleEntry &e : s4.column(golden.col)) {
      if (e.row > 8) {
        lower.push_back(&e);
      }
    }
    c.expect(lower.size() == golden.rows.size(), "n=4 col " + std::to_string(golden.col));
    for (std::size_t i = 0; i < lower.size() && i < golden.rows.size(); ++i) {
      c.expect(lower[i]->row == golden.rows[i] &&
                   lower[i]->pattern.to_string() == golden.patterns[i],
               "n=4 col " + std::to_string(golden.col) + " got " + entry_str(*lower[i]));
    }
  }
}

void count_table(Check &c) {
  const CountVector scheme[] = {vec(1, {1}), vec(2, {2, 4}), vec(3, {3, 18, 7}),
                                vec(4, {4, 60, 48, 8}), vec(5, {5, 180, 242, 60, 9})};
  const CountVector gray[] = {vec(1, {1}), vec(2, {2, 4}), vec(3, {4, 14, 10}),
                              vec(4, {8, 50, 40, 22}), vec(5, {16, 186, 154, 94, 46})};
  const int t1[] = {0, 4, 32, 180, 880};
  const int t2[] = {0, 4, 34, 196, 960};
  for (unsigned n = 1; n <= 5; ++n) {
    const CountVector g = count_scheme(n);
    const CountVector h = count_gray(n);
    c.expect(g == scheme[n - 1], "count_scheme(" + std::to_string(n) + ") = " + g.to_string());
    c.expect(h == gray[n - 1], "count_gray(" + std::to_string(n) + ") = " + h.to_string());
    c.expect(total_controls(g) == t1[n - 1], "T1(" + std::to_string(n) + ")");
    c.expect(total_controls(h) == t2[n - 1], "T2(" + std::to_string(n) + ")");
  }
}

void series_anchor(Check &c) {
  const auto rows = compare_series(50);
  c.expect(rows.size() == 50, "series length");
  c.expect(rows[9].qubits == 10 && rows[9].diff == 30720, "diff(10) = " + rows[9].diff.str());
  for (unsigned n = 3; n <= 50; ++n) {
    c.expect(rows[n - 1].diff > 0, "diff(" + std::to_string(n) + ") not positive");
    if (n > 3) {
      c.expect(rows[n - 1].diff > rows[n - 2].diff,
               "diff not increasing at n=" + std::to_string(n));
    }
  }
}

void conservation(Check &c) {
  for (unsigned n = 1; n <= 50; ++n) {
    c.expect(count_scheme(n).sum() == pow2(n - 1) * (pow2(n) - 1),
             "sum at n=" + std::to_string(n));
  }
  for (unsigned n = 1; n <= 12; ++n) {
    c.expect(count_scheme(n) == count_scheme_from_schedule(n),
             "schedule tally at n=" + std::to_string(n));
  }
}

void breakdown(Check &c) {
  for (unsigned n = 2; n <= 12; ++n) {
    const CountBreakdown b = count_breakdown(n);
    const CountVector prev = count_scheme(n - 1);
    Count b_sum = 0;
    const std::string at = "n=" + std::to_string(n);
    for (unsigned k = 0; k < n; ++k) {
      const BreakdownRow &r = b.rows[k];
      const std::string where = at + " k=" + std::to_string(k);
      c.expect(r.upper_left == (k + 1 < n ? prev.g[k] : Count(0)), "A " + where);
      c.expect(r.lower_right == (k >= 1 ? prev.g[k - 1] : Count(0)), "D " + where);
      c.expect(r.column_final == binomial(n - 1, k), "C " + where);
      c.expect(k <= 2 || r.lower_left == 0, "B " + where);
      b_sum += r.lower_left;
    }
    if (n >= 3) {
      c.expect(b.rows[1].lower_left == pow2(n - 3) * (n + 2) * (n - 1), "B^1 " + at);
    }
    c.expect(b_sum == pow2(n - 1) * (pow2(n - 1) - 1), "B^1 + B^2 " + at);
  }
}

void round_trip(Check &c) {
  double worst_residual = 0.0;
  double worst_reconstruct = 0.0;
  for (unsigned n = 1; n <= 6; ++n) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const UnitaryMatrix u = haar_random_unitary(n, seed);
      const Decomposition d = decompose(u);
      const double residual = verify(d, u, 1e-10).deviation;
      const double rec = max_abs_diff(reconstruct(d), u.matrix());
      worst_residual = std::max(worst_residual, residual);
      worst_reconstruct = std::max(worst_reconstruct, rec);
      c.expect(residual <= 1e-10 && rec <= 1e-10,
               "n=" + std::to_string(n) + " seed=" + std::to_string(seed));
    }
  }
  const UnitaryMatrix u8 = haar_random_unitary(8, 2026);
  const Decomposition d8 = decompose(u8);
  const double r8 = verify(d8, u8, 1e-9).deviation;
  c.expect(r8 <= 1e-9, "n=8 residual " + std::to_string(r8));
  char buf[160];
  std::snprintf(buf, sizeof buf, "max residual %.2e, max reconstruction error %.2e, n=8 %.2e",
                worst_residual, worst_reconstruct, r8);
  if (c.ok) {
    c.why = buf;
  }
}

void gate_semantics(Check &c) {
  std::uint64_t seed = 1;
  for (unsigned n = 1; n <= 4; ++n) {
    const std::size_t dim = std::size_t{1} << n;
    for (const std::string &s : testing::all_patterns(n)) {
      const GatePattern p = parse_pattern(s);
      for (int trial = 0; trial < 50; ++trial) {
        const ControlledGate g(p, haar_random_mat2(seed));
        const Matrix m = testing::random_matrix(dim, seed++);
        Matrix fast = m;
        apply_gate_left(g, fast);
        const double err = max_abs_diff(fast, testing::naive_product(expand_gate(g), m));
        c.expect(err <= 1e-13, "pattern " + s + " error " + std::to_string(err));
      }
    }
  }
}

void structural_invariants(Check &c) {
  for (unsigned n = 1; n <= 12; ++n) {
    const Schedule &s = generate_schedule(n);
    const std::size_t half = s.dim() / 2;
    const std::string at = "n=" + std::to_string(n);
    for (const ScheduleEntry &e : s.column(1)) {
      const std::string p = e.pattern.to_string();
      c.expect(p.find('0') == std::string::npos && p.back() != '1', at + " column-1 gate " + p);
    }
    auto lower = [&](std::size_t l) {
      std::vector<GatePattern> out;
      for (const ScheduleEntry &e : s.column(l)) {
        if (e.row > half) {
          out.push_back(e.pattern);
        }
      }
      out.pop_back();
      return out;
    };
    for (std::size_t k = 1; k <= s.dim() / 4; ++k) {
      c.expect(lower(2 * k - 1) == lower(2 * k), at + " columns " + std::to_string(2 * k - 1) +
                                                     "/" + std::to_string(2 * k));
    }
    for (std::size_t l = 1; l <= half; ++l) {
      std::string expected = "V";
      for (unsigned pos = n - 1; pos >= 1; --pos) {
        expected += ((l - 1) >> (pos - 1)) & 1U ? '1' : '*';
      }
      const ScheduleEntry &last = s.column(l).back();
      c.expect(last.pattern.to_string() == expected && last.row == half + l,
               at + " final gate of column " + std::to_string(l));
    }
  }
}

void control_counts(Check &c) {
  for (unsigned n = 2; n <= 10; ++n) {
    std::vector<GatePattern> lifted;
    for (const ScheduleEntry &e : generate_schedule(n).column(1)) {
      if (e.region == Region::LowerLeft) {
        lifted.push_back(e.pattern);
      }
    }
    for (unsigned k = 1; k <= n; ++k) {
      std::size_t hits = 0;
      for (const GatePattern &p : lifted) {
        hits += p.at(k) == GateSymbol::One ? 1 : 0;
      }
      const std::size_t expected = k == n ? n - 1 : (std::size_t{1} << (n - k - 1)) * (k - 1);
      c.expect(hits == expected,
               "one-controls n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
  }
  for (unsigned n = 2; n <= 8; ++n) {
    const Schedule &s = generate_schedule(n);
    for (std::size_t l = 2; l <= s.dim() / 2; ++l) {
      const auto m = static_cast<unsigned>(std::bit_width(l - 1));
      std::size_t expected = n - 1;
      for (unsigned k = m + 1; k <= n - 1; ++k) {
        expected += (std::size_t{1} << (n - k - 1)) * (k - 1);
      }
      std::size_t single = 0;
      for (const ScheduleEntry &e : s.column(l)) {
        single += e.region == Region::LowerLeft && e.pattern.control_count() == 1 ? 1 : 0;
      }
      c.expect(single == expected,
               "single-control n=" + std::to_string(n) + " l=" + std::to_string(l));
    }
  }
}

struct Criterion {
  const char *name;
  std::function<void(Check &)> body;
  double time_limit_s;
};

} // namespace
} // namespace qdecomp

int main() {
  using namespace qdecomp;
  const Criterion criteria[] = {
      {"golden schedule tables n=2,3 and n=4 lower-left block", golden_tables, 1.0},
      {"count table rows and totals n=1..5", count_table, 1.0},
      {"comparison series anchor diff(10)=30720, positive and increasing", series_anchor, 1.0},
      {"conservation n<=50 and schedule tally n<=12", conservation, 60.0},
      {"A/B/C/D breakdown identities n=2..12", breakdown, 60.0},
      {"round trip 100 Haar seeds n=1..6 at 1e-10, n=8 at 1e-9", round_trip, 60.0},
      {"gate semantics exhaustive n<=4, 50 draws each, 1e-13", gate_semantics, 60.0},
      {"structural invariants n<=12", structural_invariants, 60.0},
      {"control counts (one-controls n<=10, single-control n<=8)", control_counts, 60.0},
  };
  int failures = 0;
  int index = 0;
  for (const Criterion &cr : criteria) {
    ++index;
    Check check;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      cr.body(check);
    } catch (const std::exception &e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    check.expect(secs < cr.time_limit_s, "took " + std::to_string(secs) + " s");
    failures += check.ok ? 0 : 1;
    std::printf("[%s] %d. %s (%.3f s)%s%s\n", check.ok ? "PASS" : "FAIL", index, cr.name, secs,
                check.why.empty() ? "" : ": ", check.why.c_str());
  }
  std::printf("%d/%d criteria passed\n", index - failures, index);
  return failures == 0 ? 0 : 1;
}
