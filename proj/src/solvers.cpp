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

#include "blotto/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <string>
#include <unordered_set>

#include "blotto/clash.hpp"
#include "blotto/error.hpp"
#include "blotto/parallel.hpp"

namespace blotto {

namespace {

using Clock = std::chrono::steady_clock;

constexpr double kSupportDrop = 1e-12;

// Expands a mixed strategy into a dense weight vector over `list`.
std::vector<double> dense_weights(const MixedStrategy& xi,
                                  const std::vector<SymmetricStrategy>& list) {
  std::map<SymmetricStrategy, std::size_t> index;
  for (std::size_t k = 0; k < list.size(); ++k) index.emplace(list[k], k);
  std::vector<double> out(list.size(), 0.0);
  for (const auto& w : xi.support()) {
    auto it = index.find(w.strategy);
    if (it == index.end()) {
      throw InvalidArgument("strategy " + w.strategy.to_string() + " is not in the game");
    }
    out[it->second] = w.probability;
  }
  return out;
}

void check_support(const MixedStrategy& xi, int n) {
  if (xi.empty()) throw InvalidArgument("best response to an empty mixed strategy");
  for (const auto& w : xi.support()) {
    if (w.strategy.n() != n) throw InvalidArgument("mixed strategy has the wrong n");
  }
}

std::vector<SymmetricStrategy> candidate_strategies(const MixedStrategy& xi, int d, int n,
                                                    bool use_heuristic) {
  auto all = enumerate_symmetric_strategies(d, n);
  if (!use_heuristic) return all;
  const int limit = heuristic_maxass_limit(maxass(xi), d, n);
  std::vector<SymmetricStrategy> out;
  for (auto& s : all) {
    if (s.max_part() <= limit) out.push_back(std::move(s));
  }
  return out;
}

double mixed_value(const SymmetricStrategy& candidate, const MixedStrategy& xi,
                   AggregationKind agg) {
  double v = 0.0;
  for (const auto& w : xi.support()) v += w.probability * to_double(payoff(candidate, w.strategy, agg));
  return v;
}

BestResponse pick_first_max(std::vector<SymmetricStrategy>& candidates,
                            const std::vector<double>& values) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < values.size(); ++k) {
    if (values[k] > values[best]) best = k;
  }
  return {std::move(candidates[best]), values[best]};
}

// Runs fn(k) for k in [0, count) on the OpenMP team, rethrowing the first
// exception after the loop.
void parallel_for(std::ptrdiff_t count, const std::function<void(std::ptrdiff_t)>& fn) {
  std::exception_ptr failure;
  std::mutex mu;
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    try {
      fn(k);
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

std::string_view to_string(Method method) {
  switch (method) {
    case Method::kLp:
      return "lp";
    case Method::kDoa:
      return "doa";
    case Method::kMwu:
      return "mwu";
  }
  return "?";
}

Equilibrium solve_lp(const PayoffMatrix& m, double tol, const ZeroSumBackend& backend) {
  const auto start = Clock::now();
  const DenseMatrix dense = m.to_dense();
  const ZeroSumSolution sol = backend.solve(dense);
  Equilibrium eq;
  eq.method = Method::kLp;
  eq.iterations = sol.pivots;
  eq.value = sol.value;
  eq.strategy_a = MixedStrategy::from_weights(m.row_strategies, sol.row, kSupportDrop);
  eq.strategy_b = MixedStrategy::from_weights(m.col_strategies, sol.col, kSupportDrop);
  const auto row = dense_weights(eq.strategy_a, m.row_strategies);
  const auto col = dense_weights(eq.strategy_b, m.col_strategies);
  const Certificate cert = certify(dense, row, col);
  eq.exploitability = std::max({0.0, cert.upper - eq.value, eq.value - cert.lower});
  if (cert.gap() > tol) {
    throw InternalError("LP certificate gap " + std::to_string(cert.gap()) +
                        " exceeds tolerance");
  }
  eq.wall_time = Clock::now() - start;
  return eq;
}

int heuristic_maxass_limit(int opp_maxass, int d, int n) {
  return std::max(opp_maxass + 1, (d + n - 1) / n);
}

BestResponse best_response(const MixedStrategy& xi, Player responder, const GameSpec& spec,
                           bool use_heuristic) {
  spec.validate();
  check_support(xi, spec.n);
  auto candidates = candidate_strategies(xi, spec.budget(responder), spec.n, use_heuristic);
  std::vector<double> values(candidates.size());
  parallel_for(static_cast<std::ptrdiff_t>(candidates.size()), [&](std::ptrdiff_t k) {
    values[static_cast<std::size_t>(k)] =
        mixed_value(candidates[static_cast<std::size_t>(k)], xi, spec.agg);
  });
  return pick_first_max(candidates, values);
}

BestResponse best_response_serial(const MixedStrategy& xi, Player responder,
                                  const GameSpec& spec, bool use_heuristic) {
  spec.validate();
  check_support(xi, spec.n);
  auto candidates = candidate_strategies(xi, spec.budget(responder), spec.n, use_heuristic);
  std::vector<double> values(candidates.size());
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    values[k] = mixed_value(candidates[k], xi, spec.agg);
  }
  return pick_first_max(candidates, values);
}

double measure_exploitability(const Equilibrium& eq, const GameSpec& spec) {
  const BestResponse a = best_response(eq.strategy_b, Player::kA, spec, false);
  const BestResponse b = best_response(eq.strategy_a, Player::kB, spec, false);
  return std::max({0.0, a.value - eq.value, b.value + eq.value});
}

double matrix_exploitability(const PayoffMatrix& m, const Equilibrium& eq) {
  const auto row = dense_weights(eq.strategy_a, m.row_strategies);
  const auto col = dense_weights(eq.strategy_b, m.col_strategies);
  const Certificate cert = certify(m.to_dense(), row, col);
  return std::max({0.0, cert.upper - eq.value, eq.value - cert.lower});
}

GameOracle::GameOracle(const GameSpec& spec, std::size_t cap) : spec_(spec) {
  spec.validate();
  const auto count_a = count_symmetric_strategies(spec.d_a, spec.n);
  const auto count_b = count_symmetric_strategies(spec.d_b, spec.n);
  if (count_a > cap || count_b > cap) {
    throw SizeLimitError("strategy sets too large: " + std::to_string(count_a) + " and " +
                         std::to_string(count_b) + ", cap " + std::to_string(cap));
  }
  strategies_a_ = enumerate_symmetric_strategies(spec.d_a, spec.n);
  strategies_b_ = enumerate_symmetric_strategies(spec.d_b, spec.n);
}

int GameOracle::index_of(Player p, const SymmetricStrategy& s) const {
  const auto& list = strategies(p);
  // Enumeration order is strictly decreasing.
  auto it = std::lower_bound(list.begin(), list.end(), s, std::greater<>());
  if (it == list.end() || *it != s) {
    throw InvalidArgument("strategy " + s.to_string() + " is not in the game");
  }
  return static_cast<int>(it - list.begin());
}

void GameOracle::ensure(const std::vector<std::pair<int, int>>& pairs) {
  std::vector<std::pair<int, int>> missing;
  std::unordered_set<std::uint64_t> queued;
  for (const auto& [ia, ib] : pairs) {
    const auto k = key(ia, ib);
    if (!cache_.contains(k) && queued.insert(k).second) missing.emplace_back(ia, ib);
  }
  std::vector<double> values(missing.size());
  parallel_for(static_cast<std::ptrdiff_t>(missing.size()), [&](std::ptrdiff_t k) {
    const auto [ia, ib] = missing[static_cast<std::size_t>(k)];
    values[static_cast<std::size_t>(k)] =
        to_double(payoff(strategies_a_[static_cast<std::size_t>(ia)],
                         strategies_b_[static_cast<std::size_t>(ib)], spec_.agg));
  });
  for (std::size_t k = 0; k < missing.size(); ++k) {
    cache_.emplace(key(missing[k].first, missing[k].second), values[k]);
  }
}

double GameOracle::payoff_a(int ia, int ib) {
  auto it = cache_.find(key(ia, ib));
  if (it != cache_.end()) return it->second;
  const double v = to_double(payoff(strategies_a_[static_cast<std::size_t>(ia)],
                                    strategies_b_[static_cast<std::size_t>(ib)], spec_.agg));
  cache_.emplace(key(ia, ib), v);
  return v;
}

GameOracle::Response GameOracle::best_response(Player responder,
                                               const std::vector<int>& opponent_indices,
                                               const std::vector<double>& opponent_weights,
                                               bool use_heuristic) {
  if (opponent_indices.size() != opponent_weights.size() || opponent_indices.empty()) {
    throw InvalidArgument("oracle best response: bad opponent support");
  }
  const Player opp = opponent(responder);
  const auto& opp_list = strategies(opp);
  const auto& own_list = strategies(responder);

  int opp_max = 0;
  for (std::size_t k = 0; k < opponent_indices.size(); ++k) {
    if (opponent_weights[k] > kSupportDrop) {
      opp_max = std::max(opp_max,
                         opp_list[static_cast<std::size_t>(opponent_indices[k])].max_part());
    }
  }
  const int limit = use_heuristic
                        ? heuristic_maxass_limit(opp_max, spec_.budget(responder), spec_.n)
                        : std::numeric_limits<int>::max();

  std::vector<int> candidates;
  for (int c = 0; c < static_cast<int>(own_list.size()); ++c) {
    if (own_list[static_cast<std::size_t>(c)].max_part() <= limit) candidates.push_back(c);
  }

  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(candidates.size() * opponent_indices.size());
  for (int c : candidates) {
    for (int o : opponent_indices) {
      pairs.push_back(responder == Player::kA ? std::pair{c, o} : std::pair{o, c});
    }
  }
  ensure(pairs);

  Response best;
  for (int c : candidates) {
    double v = 0.0;
    for (std::size_t k = 0; k < opponent_indices.size(); ++k) {
      const int o = opponent_indices[k];
      const double pa = responder == Player::kA ? cache_.at(key(c, o)) : cache_.at(key(o, c));
      v += opponent_weights[k] * (responder == Player::kA ? pa : -pa);
    }
    if (best.index < 0 || v > best.value) best = {c, v};
  }
  return best;
}

Equilibrium solve_doa(const GameSpec& spec, const DoaOptions& options, DoaTrace* trace) {
  const auto start = Clock::now();
  GameOracle oracle(spec, options.cap);
  const int size_a = static_cast<int>(oracle.strategies(Player::kA).size());
  const int size_b = static_cast<int>(oracle.strategies(Player::kB).size());
  const int max_iterations =
      options.max_iterations > 0
          ? options.max_iterations
          : std::min(10000, std::max(10 * std::min(size_a, size_b), size_a + size_b + 1));

  std::vector<int> set_a{oracle.index_of(Player::kA, most_even_assignment(spec.d_a, spec.n))};
  std::vector<int> set_b{oracle.index_of(Player::kB, most_even_assignment(spec.d_b, spec.n))};
  if (trace != nullptr) trace->iterations.clear();

  auto restricted_strategies = [&](Player p, const std::vector<int>& set) {
    std::vector<SymmetricStrategy> out;
    for (int k : set) out.push_back(oracle.strategies(p)[static_cast<std::size_t>(k)]);
    return out;
  };

  Equilibrium eq;
  eq.method = Method::kDoa;
  for (int it = 1; it <= max_iterations; ++it) {
    if (options.deadline && Clock::now() > *options.deadline) {
      throw TimeoutError("double oracle exceeded its deadline");
    }
    std::vector<std::pair<int, int>> pairs;
    for (int a : set_a) {
      for (int b : set_b) pairs.emplace_back(a, b);
    }
    oracle.ensure(pairs);
    DenseMatrix restricted(static_cast<int>(set_a.size()), static_cast<int>(set_b.size()));
    for (std::size_t r = 0; r < set_a.size(); ++r) {
      for (std::size_t c = 0; c < set_b.size(); ++c) {
        restricted(static_cast<int>(r), static_cast<int>(c)) = oracle.payoff_a(set_a[r], set_b[c]);
      }
    }
    const ZeroSumSolution sol = solve_zero_sum(restricted);

    const auto br_a = oracle.best_response(Player::kA, set_b, sol.col, options.use_heuristic);
    const auto br_b = oracle.best_response(Player::kB, set_a, sol.row, options.use_heuristic);

    DoaIteration step;
    step.size_a = static_cast<int>(set_a.size());
    step.size_b = static_cast<int>(set_b.size());
    step.restricted_value = sol.value;
    step.response_a_value = br_a.value;
    step.response_b_value = br_b.value;
    step.response_a_new = std::find(set_a.begin(), set_a.end(), br_a.index) == set_a.end();
    step.response_b_new = std::find(set_b.begin(), set_b.end(), br_b.index) == set_b.end();
    if (options.audit_heuristic) {
      step.exhaustive_a_value = oracle.best_response(Player::kA, set_b, sol.col, false).value;
      step.exhaustive_b_value = oracle.best_response(Player::kB, set_a, sol.row, false).value;
    }
    if (trace != nullptr) trace->iterations.push_back(step);

    const double gap_a = br_a.value - sol.value;
    const double gap_b = br_b.value + sol.value;
    eq.value = sol.value;
    eq.strategy_a = MixedStrategy::from_weights(restricted_strategies(Player::kA, set_a), sol.row,
                                                kSupportDrop);
    eq.strategy_b = MixedStrategy::from_weights(restricted_strategies(Player::kB, set_b), sol.col,
                                                kSupportDrop);
    eq.iterations = it;
    eq.exploitability = std::max({0.0, gap_a, gap_b});
    eq.wall_time = Clock::now() - start;

    const bool nothing_new = !step.response_a_new && !step.response_b_new;
    if (nothing_new || (gap_a <= options.tol && gap_b <= options.tol)) return eq;
    if (step.response_a_new) set_a.push_back(br_a.index);
    if (step.response_b_new) set_b.push_back(br_b.index);
  }
  throw DoaConvergenceError("double oracle did not converge in " +
                                std::to_string(max_iterations) + " iterations (gap " +
                                std::to_string(eq.exploitability) + ")",
                            eq);
}

MwuResult multiplicative_weights(const DenseMatrix& column_payoff, double phi, int steps) {
  if (!(phi > 0.0 && phi <= 0.5)) throw InvalidArgument("phi must lie in (0, 0.5]");
  if (steps < 1) throw InvalidArgument("steps must be >= 1");
  const int rows = column_payoff.rows();
  const int cols = column_payoff.cols();
  if (rows == 0 || cols == 0) throw InvalidArgument("multiplicative weights: empty matrix");
  for (double v : column_payoff.data()) {
    if (!(v >= -1.0 - 1e-12 && v <= 1.0 + 1e-12)) {
      throw InvalidArgument("multiplicative weights: entries must lie in [-1, 1]");
    }
  }

  std::vector<double> p(static_cast<std::size_t>(rows), 1.0 / rows);
  std::vector<double> j_summed(static_cast<std::size_t>(cols), 0.0);
  std::vector<double> column_payoffs(static_cast<std::size_t>(cols));
  MwuResult out;
  out.smallest_column_payoff = 1.0;
  out.row = p;
  for (int step = 0; step < steps; ++step) {
    std::fill(column_payoffs.begin(), column_payoffs.end(), 0.0);
    for (int r = 0; r < rows; ++r) {
      const double w = p[static_cast<std::size_t>(r)];
      for (int c = 0; c < cols; ++c) column_payoffs[static_cast<std::size_t>(c)] += w * column_payoff(r, c);
    }
    int best = 0;
    for (int c = 1; c < cols; ++c) {
      if (column_payoffs[static_cast<std::size_t>(c)] > column_payoffs[static_cast<std::size_t>(best)]) best = c;
    }
    if (column_payoffs[static_cast<std::size_t>(best)] < out.smallest_column_payoff) {
      out.smallest_column_payoff = column_payoffs[static_cast<std::size_t>(best)];
      out.row = p;
    }
    j_summed[static_cast<std::size_t>(best)] += 1.0;
    double total = 0.0;
    for (int r = 0; r < rows; ++r) {
      auto& w = p[static_cast<std::size_t>(r)];
      w *= 1.0 - phi * column_payoff(r, best);
      total += w;
    }
    for (double& w : p) w /= total;
  }
  double count = 0.0;
  for (double v : j_summed) count += v;
  out.col = j_summed;
  for (double& v : out.col) v /= count;
  return out;
}

Equilibrium solve_mwu(const PayoffMatrix& m, double phi, int steps) {
  const auto start = Clock::now();
  const DenseMatrix dense = m.to_dense();
  const double scale = m.spec.agg == AggregationKind::kBlotto ? m.spec.n : 1.0;
  DenseMatrix column_payoff(dense.rows(), dense.cols());
  for (int r = 0; r < dense.rows(); ++r) {
    for (int c = 0; c < dense.cols(); ++c) column_payoff(r, c) = -dense(r, c) / scale;
  }
  const MwuResult res = multiplicative_weights(column_payoff, phi, steps);

  Equilibrium eq;
  eq.method = Method::kMwu;
  eq.iterations = steps;
  eq.strategy_a = MixedStrategy::from_weights(m.row_strategies, res.row, kSupportDrop);
  eq.strategy_b = MixedStrategy::from_weights(m.col_strategies, res.col, 0.0);
  const auto row = dense_weights(eq.strategy_a, m.row_strategies);
  const auto col = dense_weights(eq.strategy_b, m.col_strategies);
  double value = 0.0;
  for (int r = 0; r < dense.rows(); ++r) {
    for (int c = 0; c < dense.cols(); ++c) {
      value += row[static_cast<std::size_t>(r)] * dense(r, c) * col[static_cast<std::size_t>(c)];
    }
  }
  eq.value = value;
  eq.exploitability = matrix_exploitability(m, eq);
  eq.wall_time = Clock::now() - start;
  return eq;
}

}  // namespace blotto
