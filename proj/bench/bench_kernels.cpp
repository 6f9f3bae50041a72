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

// Serial reference kernels against their OpenMP counterparts, plus the
// naive permutation payoff against the rook-count payoff.
//
//   bench_kernels [n_min n_max offset]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#include "blotto/brute.hpp"
#include "blotto/clash.hpp"
#include "blotto/game.hpp"
#include "blotto/matrix.hpp"
#include "blotto/parallel.hpp"
#include "blotto/solvers.hpp"

namespace {

double time_seconds(const std::function<void()>& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace blotto;
  int n_min = 4;
  int n_max = 8;
  int offset = 5;
  if (argc == 4) {
    n_min = std::atoi(argv[1]);
    n_max = std::atoi(argv[2]);
    offset = std::atoi(argv[3]);
  }
  std::printf("threads: %d\n", max_threads());
  std::printf("%3s %3s %6s %12s %12s %12s %12s %12s %14s\n", "n", "d", "|S|", "naive_s",
              "serial_s", "parallel_s", "br_serial_s", "br_par_s", "max_terms/bud");
  for (int n = n_min; n <= n_max; ++n) {
    const int d = n + offset;
    const GameSpec spec{d, d, n, AggregationKind::kMoreThanOpponent};
    const auto strategies = enumerate_symmetric_strategies(d, n);

    double naive = -1.0;
    if (n <= 8) naive = time_seconds([&] { build_matrix_naive(spec); });
    PayoffMatrix serial;
    PayoffMatrix parallel;
    const double t_serial = time_seconds([&] { serial = build_matrix_serial(spec); });
    const double t_parallel = time_seconds([&] { parallel = build_matrix(spec); });
    if (!(serial == parallel)) {
      std::fprintf(stderr, "serial and parallel matrices differ at n=%d\n", n);
      return 1;
    }

    // Best response to a uniform mixture over the first few strategies.
    std::vector<double> weights(strategies.size(), 0.0);
    const std::size_t k = std::min<std::size_t>(strategies.size(), 8);
    for (std::size_t i = 0; i < k; ++i) weights[i] = 1.0 / static_cast<double>(k);
    const MixedStrategy xi = MixedStrategy::from_weights(strategies, weights);
    BestResponse br_s;
    BestResponse br_p;
    const double t_br_s =
        time_seconds([&] { br_s = best_response_serial(xi, Player::kA, spec, false); });
    const double t_br_p = time_seconds([&] { br_p = best_response(xi, Player::kA, spec, false); });
    if (br_s.strategy != br_p.strategy) {
      std::fprintf(stderr, "serial and parallel best responses differ at n=%d\n", n);
      return 1;
    }

    std::uint64_t max_terms = 0;
    for (const auto& a : strategies) {
      DpStats stats;
      rook_counts(ClashMatrix(a, strategies.back()), &stats);
      max_terms = std::max(max_terms, stats.terms);
    }
    std::printf("%3d %3d %6zu %12.6f %12.6f %12.6f %12.6f %12.6f %14.3e\n", n, d,
                strategies.size(), naive, t_serial, t_parallel, t_br_s, t_br_p,
                static_cast<double>(max_terms) / static_cast<double>(dp_operation_budget(n)));
  }
  return 0;
}
