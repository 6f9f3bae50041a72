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

#ifndef BLOTTO_SOLVERS_HPP_
#define BLOTTO_SOLVERS_HPP_

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "blotto/dense_matrix.hpp"
#include "blotto/error.hpp"
#include "blotto/game.hpp"
#include "blotto/lp.hpp"
#include "blotto/matrix.hpp"

namespace blotto {

enum class Method { kLp, kDoa, kMwu };
std::string_view to_string(Method method);

struct Equilibrium {
  double value = 0.0;  // payoff to A
  MixedStrategy strategy_a;
  MixedStrategy strategy_b;
  Method method = Method::kLp;
  int iterations = 0;
  double exploitability = 0.0;
  std::chrono::nanoseconds wall_time{0};
};

// Full-matrix minimax solve. Support entries below 1e-12 are dropped.
// Throws InternalError if the certificate gap exceeds tol.
Equilibrium solve_lp(const PayoffMatrix& m, double tol = 1e-9,
                     const ZeroSumBackend& backend = default_backend());

struct BestResponse {
  SymmetricStrategy strategy;
  double value = 0.0;  // expected payoff to the responder
};

// Strategies eligible under the maxass pruning rule for a responder with
// budget d against an opponent whose largest assignment is opp_maxass:
// max_part <= max(opp_maxass + 1, ceil(d / n)).
int heuristic_maxass_limit(int opp_maxass, int d, int n);

// Pure best response of `responder` to the opponent's symmetric mixed
// strategy xi. Scans every enumerated strategy (or only the maxass-pruned
// ones) in parallel; the first maximizer in enumeration order wins.
BestResponse best_response(const MixedStrategy& xi, Player responder, const GameSpec& spec,
                           bool use_heuristic);
// Single-threaded reference of the same scan.
BestResponse best_response_serial(const MixedStrategy& xi, Player responder,
                                  const GameSpec& spec, bool use_heuristic);

// Exact-oracle gap: max over both players of (best reply value - value from
// that player's side).
double measure_exploitability(const Equilibrium& eq, const GameSpec& spec);
// Same measure against a prebuilt matrix.
double matrix_exploitability(const PayoffMatrix& m, const Equilibrium& eq);

// Enumerated strategy sets of one game plus a memo of pairwise payoffs to A.
class GameOracle {
 public:
  explicit GameOracle(const GameSpec& spec, std::size_t cap = kDefaultStrategyCap);

  const GameSpec& spec() const { return spec_; }
  const std::vector<SymmetricStrategy>& strategies(Player p) const {
    return p == Player::kA ? strategies_a_ : strategies_b_;
  }
  int index_of(Player p, const SymmetricStrategy& s) const;

  // Payoff to A; cached.
  double payoff_a(int ia, int ib);
  // Computes all missing pairs in parallel.
  void ensure(const std::vector<std::pair<int, int>>& pairs);

  struct Response {
    int index = -1;
    double value = 0.0;
  };
  // opponent_weights[k] applies to opponent_indices[k].
  Response best_response(Player responder, const std::vector<int>& opponent_indices,
                         const std::vector<double>& opponent_weights, bool use_heuristic);

  std::size_t cached_pairs() const { return cache_.size(); }

 private:
  static std::uint64_t key(int ia, int ib) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(ia)) << 32) |
           static_cast<std::uint32_t>(ib);
  }
  GameSpec spec_;
  std::vector<SymmetricStrategy> strategies_a_;
  std::vector<SymmetricStrategy> strategies_b_;
  std::unordered_map<std::uint64_t, double> cache_;
};

struct DoaOptions {
  bool use_heuristic = false;
  double tol = 1e-9;
  // 0 selects min(10000, max(10 * min(|S_A|, |S_B|), |S_A| + |S_B| + 1)).
  int max_iterations = 0;
  // Also run the exhaustive oracle each iteration and record its values.
  bool audit_heuristic = false;
  std::size_t cap = kDefaultStrategyCap;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct DoaIteration {
  int size_a = 0;
  int size_b = 0;
  double restricted_value = 0.0;
  double response_a_value = 0.0;  // to A, against the restricted B strategy
  double response_b_value = 0.0;  // to B, against the restricted A strategy
  bool response_a_new = false;
  bool response_b_new = false;
  // Filled when auditing.
  std::optional<double> exhaustive_a_value;
  std::optional<double> exhaustive_b_value;

  // Bounds on the game value implied by this iteration's restricted pair.
  double lower() const { return -response_b_value; }
  double upper() const { return response_a_value; }
};

struct DoaTrace {
  std::vector<DoaIteration> iterations;
};

class DoaConvergenceError : public ConvergenceError {
 public:
  DoaConvergenceError(const std::string& what, Equilibrium last)
      : ConvergenceError(what), last_(std::move(last)) {}
  const Equilibrium& last() const { return last_; }

 private:
  Equilibrium last_;
};

// Double oracle: restricted sets start at the most even assignment, each
// iteration solves the restricted game and adds both best responses.
// Converged when both responses are already present or both gaps <= tol.
Equilibrium solve_doa(const GameSpec& spec, const DoaOptions& options = {},
                      DoaTrace* trace = nullptr);

struct MwuResult {
  std::vector<double> row;  // pBest
  std::vector<double> col;  // normalized jSummed
  double smallest_column_payoff = 1.0;
};

// Multiplicative weights on the column player's payoff matrix, entries in
// [-1, 1]. Throws InvalidArgument for phi outside (0, 0.5], steps < 1 or
// out-of-range entries.
MwuResult multiplicative_weights(const DenseMatrix& column_payoff, double phi, int steps);

// Runs multiplicative_weights on the negated (and for blotto, 1/n scaled)
// matrix and reports the value to A on the original scale.
Equilibrium solve_mwu(const PayoffMatrix& m, double phi, int steps);

}  // namespace blotto

#endif  // BLOTTO_SOLVERS_HPP_
