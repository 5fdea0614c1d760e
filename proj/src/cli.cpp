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
#include "qdecomp/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <limits>
#include <memory>
#include <optional>
#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "qdecomp/counting.hpp"
#include "qdecomp/decompose.hpp"
#include "qdecomp/error.hpp"
#include "qdecomp/io.hpp"
#include "qdecomp/linalg.hpp"
#include "qdecomp/scheme.hpp"

namespace qdecomp::cli {

namespace {

// Hand-written matrix files are accepted with a looser unitarity bound.
constexpr double kMatrixFileTol = 1e-8;
constexpr double kDefaultTol = 1e-10;

struct Options {
  unsigned n = 0;
  std::optional<unsigned> random_n;
  std::uint64_t seed = 1;
  double tol = kDefaultTol;
  std::string out;
  std::string csv;
  std::string matrix_path;
  std::string decomposition_path;
  bool gray = false;
  bool breakdown = false;
  unsigned max_n = kMaxCountQubits;
};

// Writes to the named file, or to `fallback` when the name is empty.
class Sink {
public:
  Sink(const std::string &path, std::ostream &fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) {
        throw InvalidArgument("cannot open \"" + path + "\" for writing");
      }
      stream_ = file_.get();
    }
  }
  std::ostream &get() { return *stream_; }

private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream *stream_;
};

std::ifstream open_input(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InvalidArgument("cannot open \"" + path + "\"");
  }
  return in;
}

UnitaryMatrix load_unitary(const std::string &path) {
  std::ifstream in = open_input(path);
  MatrixFile file = read_matrix_file(in);
  return UnitaryMatrix(std::move(file.matrix), kMatrixFileTol);
}

int cmd_schedule(const Options &o, std::ostream &out) {
  const Schedule &s = generate_schedule(o.n);
  Sink sink(o.out, out);
  write_schedule(sink.get(), s);
  return kOk;
}

int cmd_random(const Options &o, std::ostream &out) {
  const UnitaryMatrix u = haar_random_unitary(o.n, o.seed);
  Sink sink(o.out, out);
  write_matrix_file(sink.get(), u.matrix());
  return kOk;
}

int cmd_decompose(const Options &o, std::ostream &out, std::ostream &err) {
  if (o.random_n.has_value() == !o.matrix_path.empty()) {
    throw InvalidArgument("decompose: give either a matrix file or --random <n>");
  }
  const UnitaryMatrix u =
      o.random_n ? haar_random_unitary(*o.random_n, o.seed) : load_unitary(o.matrix_path);

  DecomposeOptions opts;
  opts.input_tol = kMatrixFileTol;
  opts.residual_tol = std::numeric_limits<double>::infinity();
  const Decomposition d = decompose(u, opts);
  const VerifyReport report = verify(d, u, o.tol);

  // Records go to --out; without it they take stdout and the summary moves to stderr.
  std::ostream &summary = o.out.empty() ? err : out;
  Sink sink(o.out, out);
  write_decomposition(sink.get(), d);

  summary << "qubits " << d.qubits << '\n'
          << "slots " << d.slots() << '\n'
          << "nontrivial " << d.gates.size() << '\n'
          << "skipped " << d.skipped << '\n'
          << "controls " << d.total_controls() << '\n'
          << "residual " << format_double(std::max(d.residual, report.deviation)) << '\n';
  if (!report.passed || !(d.residual <= o.tol)) {
    err << "error: residual exceeds tolerance " << format_double(o.tol) << '\n';
    return kResidual;
  }
  return kOk;
}

int cmd_verify(const Options &o, std::ostream &out) {
  const UnitaryMatrix u = load_unitary(o.matrix_path);
  std::ifstream in = open_input(o.decomposition_path);
  const Decomposition d = read_decomposition(in);
  const VerifyReport report = verify(d, u, o.tol);
  out << "deviation " << format_double(report.deviation) << '\n'
      << (report.passed ? "PASS" : "FAIL") << '\n';
  return report.passed ? kOk : kVerifyFailed;
}

int cmd_count(const Options &o, std::ostream &out) {
  if (o.breakdown && (o.n < 2 || o.n > kMaxQubits)) {
    throw InvalidArgument("count --breakdown: n must be in [2, " + std::to_string(kMaxQubits) +
                          "]");
  }
  const CountVector g = count_scheme(o.n);
  out << g.to_string() << " | T1=" << total_controls(g).str() << '\n';
  if (o.gray) {
    const CountVector gray = count_gray(o.n);
    out << gray.to_string() << " | T2=" << total_controls(gray).str() << '\n';
  }
  if (o.breakdown) {
    const CountBreakdown b = count_breakdown(o.n);
    out << "k A B C D\n";
    for (std::size_t k = 0; k < b.rows.size(); ++k) {
      const BreakdownRow &r = b.rows[k];
      out << k << ' ' << r.upper_left.str() << ' ' << r.lower_left.str() << ' '
          << r.column_final.str() << ' ' << r.lower_right.str() << '\n';
    }
  }
  return kOk;
}

int cmd_compare(const Options &o, std::ostream &out) {
  const auto rows = compare_series(o.max_n);
  Sink sink(o.csv, out);
  write_comparison_csv(sink.get(), rows);
  return kOk;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Recursive decomposition of n-qubit unitaries into controlled "
               "single-qubit gates"};
  app.name("qdecomp");
  app.require_subcommand(1);
  Options o;

  auto *schedule = app.add_subcommand("schedule", "Print the symbolic elimination schedule");
  schedule->add_option("n", o.n, "Qubit count (1-12)")->required();
  schedule->add_option("--out", o.out, "Output file (default stdout)");

  auto *decomp = app.add_subcommand("decompose", "Decompose a unitary and verify the result");
  decomp->add_option("matrix", o.matrix_path, "Matrix file");
  decomp->add_option("--random", o.random_n, "Decompose a Haar-random unitary on n qubits");
  decomp->add_option("--seed", o.seed, "Seed for --random");
  decomp->add_option("--out", o.out, "Decomposition record file (default stdout)");
  decomp->add_option("--tol", o.tol, "Residual tolerance");

  auto *ver = app.add_subcommand("verify", "Check U_r...U_1 U = I for a stored decomposition");
  ver->add_option("matrix", o.matrix_path, "Matrix file")->required();
  ver->add_option("decomposition", o.decomposition_path, "Decomposition record file")
      ->required();
  ver->add_option("--tol", o.tol, "Tolerance on max |U_r...U_1 U - I|");

  auto *count = app.add_subcommand("count", "Gate counts by number of controls");
  count->add_option("n", o.n, "Qubit count (1-50)")->required();
  count->add_flag("--gray", o.gray, "Also print the Gray-code scheme counts");
  count->add_flag("--breakdown", o.breakdown, "Print the A/B/C/D split per k (n <= 12)");

  auto *compare = app.add_subcommand("compare", "Total controls of both schemes, as CSV");
  compare->add_option("--max", o.max_n, "Largest n (<= 50)");
  compare->add_option("--csv", o.csv, "CSV output file (default stdout)");

  auto *random = app.add_subcommand("random", "Write a Haar-random unitary matrix file");
  random->add_option("n", o.n, "Qubit count (1-12)")->required();
  random->add_option("--seed", o.seed, "Seed");
  random->add_option("--out", o.out, "Output file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (schedule->parsed()) {
      return cmd_schedule(o, out);
    }
    if (decomp->parsed()) {
      return cmd_decompose(o, out, err);
    }
    if (ver->parsed()) {
      return cmd_verify(o, out);
    }
    if (count->parsed()) {
      return cmd_count(o, out);
    }
    if (compare->parsed()) {
      return cmd_compare(o, out);
    }
    if (random->parsed()) {
      return cmd_random(o, out);
    }
  } catch (const NonUnitaryError &e) {
    err << "error: " << e.what() << '\n';
    return kNonUnitary;
  } catch (const ResidualError &e) {
    err << "error: " << e.what() << '\n';
    return kResidual;
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

} // namespace qdecomp::cli
