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

#include <sstream>

#include <gtest/gtest.h>

#include "qdecomp/counting.hpp"
#include "qdecomp/error.hpp"
#include "qdecomp/scheme.hpp"

namespace qdecomp {
namespace {

Count pow2(unsigned e) { return Count(1) << e; }

CountVector vec(unsigned n, std::initializer_list<int> values) {
  CountVector v;
  v.qubits = n;
  for (int x : values) {
    v.g.emplace_back(x);
  }
  return v;
}

TEST(CountScheme, TableRows) {
  EXPECT_EQ(count_scheme(1), vec(1, {1}));
  EXPECT_EQ(count_scheme(2), vec(2, {2, 4}));
  EXPECT_EQ(count_scheme(3), vec(3, {3, 18, 7}));
  EXPECT_EQ(count_scheme(4), vec(4, {4, 60, 48, 8}));
  EXPECT_EQ(count_scheme(5), vec(5, {5, 180, 242, 60, 9}));
  EXPECT_EQ(count_scheme(5).to_string(), "5 180 242 60 9");
}

TEST(CountScheme, RangeChecked) {
  EXPECT_THROW(count_scheme(0), InvalidArgument);
  EXPECT_THROW(count_scheme(51), InvalidArgument);
  EXPECT_THROW(count_gray(51), InvalidArgument);
  EXPECT_THROW(compare_series(51), InvalidArgument);
  EXPECT_THROW(count_scheme_from_schedule(13), InvalidArgument);
  EXPECT_THROW(count_breakdown(1), InvalidArgument);
}

TEST(CountScheme, MatchesScheduleTally) {
  EXPECT_EQ(count_scheme_from_schedule(1), vec(1, {1}));
  EXPECT_EQ(count_scheme_from_schedule(2), vec(2, {2, 4}));
  for (unsigned n = 1; n <= 12; ++n) {
    // Independent tally straight off the generated schedule.
    CountVector tally;
    tally.qubits = n;
    tally.g.assign(n, 0);
    for (const ScheduleEntry &e : generate_schedule(n).entries()) {
      tally.g[e.pattern.control_count()] += 1;
    }
    EXPECT_EQ(count_scheme(n), tally) << "n=" << n;
    EXPECT_EQ(count_scheme_from_schedule(n), tally) << "n=" << n;
  }
}

TEST(CountScheme, Conservation) {
  for (unsigned n = 1; n <= 50; ++n) {
    EXPECT_EQ(count_scheme(n).sum(), pow2(n - 1) * (pow2(n) - 1)) << "n=" << n;
  }
}

TEST(CountScheme, ClosedForms) {
  for (unsigned n = 1; n <= 50; ++n) {
    const CountVector v = count_scheme(n);
    ASSERT_EQ(v.g.size(), n);
    EXPECT_EQ(v.g[0], Count(n));
    if (n >= 2) {
      const Count g1 = Count(n) * (n - 1) * (pow2(n - 2) + 1);
      EXPECT_EQ(v.g[1], g1) << "n=" << n;
      EXPECT_EQ(g1_closed_form(n), g1);
    }
    if (n >= 3) {
      const Count g2 = (pow2(2 * n) - 4) / 3 - pow2(n) * (n - 1) + Count(n) * (n - 1) * (n - 2) / 2;
      EXPECT_EQ(v.g[2], g2) << "n=" << n;
      EXPECT_EQ(g2_closed_form(n), g2);
      EXPECT_EQ(v.g[n - 1], Count(7 + (n - 3))) << "n=" << n;
    }
    for (unsigned k = 3; k + 1 < n; ++k) {
      const CountVector p = count_scheme(n - 1);
      EXPECT_EQ(v.g[k], p.g[k] + p.g[k - 1] + binomial(n - 1, k)) << "n=" << n << " k=" << k;
    }
  }
}

TEST(Binomial, Values) {
  EXPECT_EQ(binomial(5, 2), Count(10));
  EXPECT_EQ(binomial(5, 0), Count(1));
  EXPECT_EQ(binomial(5, 6), Count(0));
  EXPECT_EQ(binomial(49, 24), Count("63205303218876"));
}

TEST(Breakdown, KnownRows) {
  const CountBreakdown b3 = count_breakdown(3);
  EXPECT_EQ(b3.rows[1], (BreakdownRow{4, 10, 2, 2}));
  EXPECT_EQ(b3.rows[0], (BreakdownRow{2, 0, 1, 0}));
  EXPECT_EQ(count_breakdown(2).rows[1], (BreakdownRow{0, 2, 1, 1}));
}

TEST(Breakdown, B1Values) {
  EXPECT_EQ(b1_closed_form(3), Count(10));
  EXPECT_EQ(b1_closed_form(4), Count(36));
  EXPECT_EQ(b1_closed_form(5), Count(112));
  EXPECT_EQ(count_breakdown(4).rows[1].lower_left, Count(36));
  EXPECT_EQ(count_breakdown(5).rows[1].lower_left, Count(112));
  EXPECT_THROW(b1_closed_form(2), InvalidArgument);
}

TEST(Breakdown, Identities) {
  for (unsigned n = 2; n <= 12; ++n) {
    const CountBreakdown b = count_breakdown(n);
    const CountVector g = count_scheme(n);
    const CountVector prev = count_scheme(n - 1);
    ASSERT_EQ(b.rows.size(), n);
    Count b_sum = 0;
    for (unsigned k = 0; k < n; ++k) {
      const BreakdownRow &r = b.rows[k];
      EXPECT_EQ(r.total(), g.g[k]);
      EXPECT_EQ(r.upper_left, k + 1 < n ? prev.g[k] : Count(0)) << n << " " << k;
      EXPECT_EQ(r.lower_right, k >= 1 ? prev.g[k - 1] : Count(0)) << n << " " << k;
      EXPECT_EQ(r.column_final, binomial(n - 1, k)) << n << " " << k;
      if (k > 2) {
        EXPECT_EQ(r.lower_left, Count(0)) << n << " " << k;
      }
      b_sum += r.lower_left;
    }
    EXPECT_EQ(b_sum, pow2(n - 1) * (pow2(n - 1) - 1)) << n;
    if (n >= 3) {
      EXPECT_EQ(b.rows[1].lower_left, pow2(n - 3) * (n + 2) * (n - 1)) << n;
      EXPECT_EQ(b.rows[1].lower_left, b1_closed_form(n));
    }
  }
}

TEST(Gray, TableRows) {
  EXPECT_EQ(count_gray(1), vec(1, {1}));
  EXPECT_EQ(count_gray(2), vec(2, {2, 4}));
  EXPECT_EQ(count_gray(3), vec(3, {4, 14, 10}));
  EXPECT_EQ(count_gray(4), vec(4, {8, 50, 40, 22}));
  EXPECT_EQ(count_gray(5), vec(5, {16, 186, 154, 94, 46}));
}

TEST(Gray, RecursionAgainstDirectEvaluation) {
  std::vector<Count> prev = {1};
  for (unsigned n = 2; n <= 50; ++n) {
    std::vector<Count> cur(n);
    cur[0] = pow2(n - 1);
    for (unsigned k = 1; k < n; ++k) {
      const Count carry = k < prev.size() ? prev[k] : Count(0);
      const Count spread = n - 2 >= k ? pow2(n - 2) : pow2(k);
      cur[k] = carry + prev[k - 1] + spread + pow2(2 * n - k - 2) - pow2(n - 2);
    }
    ASSERT_EQ(count_gray(n).g, cur) << "n=" << n;
    prev = std::move(cur);
  }
}

TEST(Gray, Conservation) {
  for (unsigned n = 1; n <= 50; ++n) {
    EXPECT_EQ(count_gray(n).sum(), pow2(n - 1) * (pow2(n) - 1)) << "n=" << n;
  }
}

TEST(Totals, TableValues) {
  const int t1[] = {0, 4, 32, 180, 880};
  const int t2[] = {0, 4, 34, 196, 960};
  for (unsigned n = 1; n <= 5; ++n) {
    EXPECT_EQ(total_controls(count_scheme(n)), Count(t1[n - 1]));
    EXPECT_EQ(total_controls(count_gray(n)), Count(t2[n - 1]));
  }
}

TEST(Totals, WeightedTotalGeneralizesT1) {
  for (unsigned n = 1; n <= 20; ++n) {
    const CountVector v = count_scheme(n);
    std::vector<Count> weights;
    for (unsigned k = 0; k < n; ++k) {
      weights.emplace_back(k);
    }
    EXPECT_EQ(weighted_total(v, weights), total_controls(v));
    std::vector<Count> ones(n, 1);
    EXPECT_EQ(weighted_total(v, ones), v.sum());
  }
  EXPECT_THROW(weighted_total(count_scheme(3), std::vector<Count>{1, 2}), InvalidArgument);
}

TEST(Compare, Anchors) {
  const auto rows = compare_series(50);
  ASSERT_EQ(rows.size(), 50U);
  EXPECT_EQ(rows[9].qubits, 10U);
  EXPECT_EQ(rows[9].diff, Count(30720));
  EXPECT_EQ(rows[1].diff, Count(0));
  EXPECT_EQ(rows[3].t1, Count(180));
  EXPECT_EQ(rows[3].t2, Count(196));
  EXPECT_EQ(rows[3].diff, Count(16));
  for (unsigned n = 3; n <= 50; ++n) {
    const ComparisonRow &r = rows[n - 1];
    EXPECT_EQ(r.diff, r.t2 - r.t1);
    EXPECT_GT(r.diff, 0) << n;
    if (n > 3) {
      EXPECT_GT(r.diff, rows[n - 2].diff) << n;
    }
  }
}

TEST(Compare, CsvFormat) {
  std::ostringstream out;
  const auto rows = compare_series(4);
  write_comparison_csv(out, rows);
  EXPECT_EQ(out.str(), "n,T1,T2,diff\n1,0,0,0\n2,4,4,0\n3,32,34,2\n4,180,196,16\n");
}

TEST(Compare, ExceedsSixtyFourBits) {
  const auto rows = compare_series(50);
  EXPECT_GT(rows.back().t2, Count(std::numeric_limits<std::uint64_t>::max()));
}

} // namespace
} // namespace qdecomp
