// Copyright 2026 The Blotto Solver Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <chrono>
#include <filesystem>
#include <iomanip>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "blotto/brute.hpp"
#include "blotto/clash.hpp"
#include "blotto/error.hpp"
#include "blotto/game.hpp"
#include "blotto/matrix.hpp"
#include "blotto/numeric.hpp"
#include "blotto/parallel.hpp"
#include "blotto/solvers.hpp"

namespace blotto::cli {

namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

// Usage problems detected after CLI11 parsing succeeded.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SpecFlags {
  int d_a = -1;
  int d_b = -1;
  int n = -1;
  std::string agg = "mto";

  void add_to(CLI::App* cmd) {
    cmd->add_option("--da", d_a, "resources of player A");
    cmd->add_option("--db", d_b, "resources of player B");
    cmd->add_option("--n", n, "battlefield count (>= 2)");
    cmd->add_option("--agg", agg, "aggregation: blotto | mto | majoritarian")
        ->check(CLI::IsMember({"blotto", "mto", "majoritarian"}));
  }
  bool given() const { return d_a >= 0 || d_b >= 0 || n >= 0; }
  GameSpec spec() const {
    if (d_a < 0 || d_b < 0 || n < 2) {
      throw UsageError("--da, --db (>= 0) and --n (>= 2) are required");
    }
    return GameSpec{d_a, d_b, n, parse_aggregation(agg)};
  }
};

json strategy_json(const SymmetricStrategy& s) {
  return std::vector<int>(s.parts().begin(), s.parts().end());
}

json mixed_json(const MixedStrategy& xi) {
  json out = json::array();
  for (const auto& w : xi.support()) {
    out.push_back({{"strategy", strategy_json(w.strategy)}, {"probability", w.probability}});
  }
  return out;
}

json spec_json(const GameSpec& spec) {
  return {{"d_a", spec.d_a}, {"d_b", spec.d_b}, {"n", spec.n},
          {"agg", std::string(to_string(spec.agg))}};
}

json report_json(const GameSpec& spec, const Equilibrium& eq) {
  return {{"method", std::string(to_string(eq.method))},
          {"spec", spec_json(spec)},
          {"value", eq.value},
          {"strategy_a", mixed_json(eq.strategy_a)},
          {"strategy_b", mixed_json(eq.strategy_b)},
          {"iterations", eq.iterations},
          {"exploitability", eq.exploitability},
          {"wall_time_ms", std::chrono::duration<double, std::milli>(eq.wall_time).count()}};
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int cmd_enumerate(int d, int n, const std::string& format, std::ostream& out) {
  if (d < 0 || n < 2) throw UsageError("enumerate needs --d >= 0 and --n >= 2");
  const auto list = enumerate_symmetric_strategies(d, n);
  if (format == "json") {
    json doc = {{"d", d}, {"n", n}, {"count", list.size()}, {"strategies", json::array()}};
    for (const auto& s : list) doc["strategies"].push_back(strategy_json(s));
    out << doc.dump() << '\n';
  } else {
    for (const auto& s : list) out << s.to_string() << '\n';
    out << "count: " << list.size() << '\n';
  }
  return kExitOk;
}

SymmetricStrategy read_strategy(const std::string& text, const char* flag, bool strict,
                                std::ostream& err) {
  bool reordered = false;
  SymmetricStrategy s;
  try {
    s = parse_strategy(text, &reordered);
  } catch (const InvalidArgument& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
  if (reordered) {
    if (strict) throw UsageError(std::string(flag) + " must be non-increasing");
    err << "warning: " << flag << " reordered to " << s.to_string() << '\n';
  }
  return s;
}

int cmd_payoff(const std::string& a_text, const std::string& b_text, const std::string& agg_name,
               bool check, bool strict, const std::string& format, std::ostream& out,
               std::ostream& err) {
  const SymmetricStrategy a = read_strategy(a_text, "--a", strict, err);
  const SymmetricStrategy b = read_strategy(b_text, "--b", strict, err);
  if (a.n() != b.n()) {
    throw UsageError("--a has " + std::to_string(a.n()) + " battlefields but --b has " +
                     std::to_string(b.n()));
  }
  if (a.n() < 2) throw UsageError("strategies need at least 2 battlefields");
  const AggregationKind agg = parse_aggregation(agg_name);
  const Rational value = payoff(a, b, agg);
  const double decimal = to_double(value);

  std::optional<bool> check_ok;
  if (check && a.n() <= kBruteRookMaxN) check_ok = naive_payoff(a, b, agg) == value;

  if (format == "json") {
    json doc = {{"a", strategy_json(a)},
                {"b", strategy_json(b)},
                {"agg", agg_name},
                {"payoff", to_fraction_string(value)},
                {"decimal", decimal}};
    if (check) doc["check"] = check_ok ? (*check_ok ? "ok" : "mismatch") : "skipped";
    out << doc.dump() << '\n';
  } else {
    out << to_fraction_string(value) << " (" << format_decimal(decimal) << ")\n";
    if (check) {
      out << "check: " << (check_ok ? (*check_ok ? "ok" : "mismatch") : "skipped (n > 8)")
          << '\n';
    }
  }
  return (check_ok && !*check_ok) ? kExitComputation : kExitOk;
}

int cmd_matrix(const SpecFlags& flags, const std::string& path, std::size_t cap, int threads,
               std::ostream& out) {
  const GameSpec spec = flags.spec();
  BuildOptions options;
  options.cap = cap;
  options.threads = threads;
  const auto start = Clock::now();
  const PayoffMatrix m = build_matrix(spec, options);
  const double elapsed = seconds_since(start);
  save_matrix(m, path);
  out << "matrix: " << m.rows() << " x " << m.cols() << '\n';
  out << "build_time_ms: " << std::fixed << std::setprecision(3) << elapsed * 1e3 << '\n';
  out << "written: " << path << '\n';
  return kExitOk;
}

struct SolveFlags {
  SpecFlags spec;
  std::string matrix_path;
  std::string method = "lp";
  bool heuristic = false;
  double tol = 1e-9;
  std::optional<double> phi;
  std::optional<int> steps;
  int max_iterations = 0;
  std::size_t cap = kDefaultStrategyCap;
  int threads = 0;
};

int cmd_solve(const SolveFlags& f, std::ostream& out, std::ostream& err) {
  if (f.spec.given() == !f.matrix_path.empty()) {
    throw UsageError("solve needs either game flags (--da --db --n --agg) or --matrix");
  }
  if (f.method == "mwu") {
    if (!f.phi || !f.steps) throw UsageError("--method mwu requires --phi and --steps");
    if (!(*f.phi > 0.0 && *f.phi <= 0.5)) throw UsageError("--phi must lie in (0, 0.5]");
    if (*f.steps < 1) throw UsageError("--steps must be >= 1");
  }
  std::optional<PayoffMatrix> matrix;
  GameSpec spec;
  if (!f.matrix_path.empty()) {
    matrix = load_matrix(f.matrix_path);
    spec = matrix->spec;
  } else {
    spec = f.spec.spec();
  }
  auto need_matrix = [&]() -> const PayoffMatrix& {
    if (!matrix) {
      BuildOptions options;
      options.cap = f.cap;
      options.threads = f.threads;
      matrix = build_matrix(spec, options);
    }
    return *matrix;
  };

  Equilibrium eq;
  if (f.method == "lp") {
    eq = solve_lp(need_matrix(), f.tol);
  } else if (f.method == "mwu") {
    eq = solve_mwu(need_matrix(), *f.phi, *f.steps);
  } else {
    DoaOptions options;
    options.use_heuristic = f.heuristic;
    options.tol = f.tol;
    options.max_iterations = f.max_iterations;
    options.cap = f.cap;
    try {
      eq = solve_doa(spec, options);
    } catch (const DoaConvergenceError& e) {
      json doc = report_json(spec, e.last());
      doc["converged"] = false;
      doc["error"] = e.what();
      out << doc.dump(2) << '\n';
      err << "error: " << e.what() << '\n';
      return kExitComputation;
    }
  }
  json doc = report_json(spec, eq);
  if (eq.method == Method::kDoa) {
    doc["converged"] = true;
    doc["heuristic"] = f.heuristic;
  }
  if (eq.method == Method::kMwu) {
    doc["phi"] = *f.phi;
    doc["steps"] = *f.steps;
  }
  out << doc.dump(2) << '\n';
  return kExitOk;
}

struct BenchFlags {
  int n_min = 4;
  int n_max = 8;
  int offset = 5;
  std::string agg = "mto";
  double timeout = 60.0;
  int naive_max_n = kNaivePayoffMaxN;
  int threads = 0;
};

template <typename Fn>
std::string timed_cell(double timeout, Fn&& fn) {
  const auto start = Clock::now();
  const auto deadline = start + std::chrono::duration_cast<Clock::duration>(
                                    std::chrono::duration<double>(timeout));
  try {
    fn(deadline);
  } catch (const TimeoutError&) {
    return "timeout";
  } catch (const SizeLimitError&) {
    return "too_large";
  }
  std::ostringstream cell;
  cell << std::fixed << std::setprecision(6) << seconds_since(start);
  return cell.str();
}

int cmd_bench(const BenchFlags& f, std::ostream& out) {
  if (f.n_min < 2 || f.n_max < f.n_min) throw UsageError("bench needs 2 <= --n-min <= --n-max");
  if (f.offset < 0) throw UsageError("--offset must be >= 0");
  if (!(f.timeout > 0.0)) throw UsageError("--timeout must be positive");
  const AggregationKind agg = parse_aggregation(f.agg);
  out << "n,d,strategies,naive_matrix_s,clash_matrix_s,doa_s,doa_heuristic_s\n";
  for (int n = f.n_min; n <= f.n_max; ++n) {
    const int d = n + f.offset;
    const GameSpec spec{d, d, n, agg};
    std::string naive = "skipped";
    if (n <= f.naive_max_n) {
      naive = timed_cell(f.timeout, [&](Clock::time_point deadline) {
        BuildOptions o;
        o.deadline = deadline;
        build_matrix_naive(spec, o);
      });
    }
    const std::string clash = timed_cell(f.timeout, [&](Clock::time_point deadline) {
      BuildOptions o;
      o.deadline = deadline;
      o.threads = f.threads;
      build_matrix(spec, o);
    });
    auto doa_cell = [&](bool heuristic) {
      return timed_cell(f.timeout, [&](Clock::time_point deadline) {
        DoaOptions o;
        o.use_heuristic = heuristic;
        o.deadline = deadline;
        solve_doa(spec, o);
      });
    };
    const std::string doa = doa_cell(false);
    const std::string doa_h = doa_cell(true);
    out << n << ',' << d << ',' << count_symmetric_strategies(d, n) << ',' << naive << ','
        << clash << ',' << doa << ',' << doa_h << '\n';
    out.flush();
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symmetrized multi-battlefield conflict solver", "blotto"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "cap on worker threads (0 = runtime default)")
      ->check(CLI::NonNegativeNumber);

  int enum_d = -1;
  int enum_n = -1;
  std::string enum_format = "plain";
  auto* enumerate = app.add_subcommand("enumerate", "list symmetric strategies");
  enumerate->add_option("--d", enum_d, "resources")->required();
  enumerate->add_option("--n", enum_n, "battlefields")->required();
  enumerate->add_option("--format", enum_format, "plain | json")
      ->check(CLI::IsMember({"plain", "json"}));

  std::string pay_a;
  std::string pay_b;
  std::string pay_agg = "mto";
  std::string pay_format = "plain";
  bool pay_check = false;
  bool pay_strict = false;
  auto* pay = app.add_subcommand("payoff", "exact payoff of one symmetric profile");
  pay->add_option("--a", pay_a, "strategy of A, e.g. 3,1,0")->required();
  pay->add_option("--b", pay_b, "strategy of B")->required();
  pay->add_option("--agg", pay_agg, "blotto | mto | majoritarian")
      ->check(CLI::IsMember({"blotto", "mto", "majoritarian"}));
  pay->add_flag("--check", pay_check, "cross-check against permutation enumeration (n <= 8)");
  pay->add_flag("--strict", pay_strict, "reject vectors that are not non-increasing");
  pay->add_option("--format", pay_format, "plain | json")->check(CLI::IsMember({"plain", "json"}));

  SpecFlags mat_flags;
  std::string mat_out;
  std::size_t mat_cap = kDefaultStrategyCap;
  auto* mat = app.add_subcommand("matrix", "build and cache a full payoff matrix");
  mat_flags.add_to(mat);
  mat->add_option("-o,--out", mat_out, "output path")->required();
  mat->add_option("--cap", mat_cap, "per-player strategy cap");

  SolveFlags solve_flags;
  auto* solve = app.add_subcommand("solve", "compute an equilibrium");
  solve_flags.spec.add_to(solve);
  solve->add_option("--matrix", solve_flags.matrix_path, "cached matrix file");
  solve->add_option("--method", solve_flags.method, "lp | doa | mwu")
      ->check(CLI::IsMember({"lp", "doa", "mwu"}));
  solve->add_flag("--heuristic", solve_flags.heuristic, "maxass pruning in the DOA oracle");
  solve->add_option("--tol", solve_flags.tol, "solver tolerance");
  solve->add_option("--phi", solve_flags.phi, "MWU multiplier in (0, 0.5]");
  solve->add_option("--steps", solve_flags.steps, "MWU steps");
  solve->add_option("--max-iterations", solve_flags.max_iterations, "DOA iteration cap");
  solve->add_option("--cap", solve_flags.cap, "per-player strategy cap");

  BenchFlags bench_flags;
  auto* bench = app.add_subcommand("bench", "timing sweep over n with d = n + offset (CSV)");
  bench->add_option("--n-min", bench_flags.n_min, "first n");
  bench->add_option("--n-max", bench_flags.n_max, "last n");
  bench->add_option("--offset", bench_flags.offset, "d - n");
  bench->add_option("--agg", bench_flags.agg, "blotto | mto | majoritarian")
      ->check(CLI::IsMember({"blotto", "mto", "majoritarian"}));
  bench->add_option("--timeout", bench_flags.timeout, "per-cell timeout in seconds");
  bench->add_option("--naive-max-n", bench_flags.naive_max_n, "largest n for the naive column");

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("blotto");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    set_thread_limit(threads);
    solve_flags.threads = threads;
    bench_flags.threads = threads;
    if (*enumerate) return cmd_enumerate(enum_d, enum_n, enum_format, out);
    if (*pay) {
      return cmd_payoff(pay_a, pay_b, pay_agg, pay_check, pay_strict, pay_format, out, err);
    }
    if (*mat) return cmd_matrix(mat_flags, mat_out, mat_cap, threads, out);
    if (*solve) return cmd_solve(solve_flags, out, err);
    if (*bench) return cmd_bench(bench_flags, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitComputation;
  }
  return kExitUsage;
}

}  // namespace blotto::cli
