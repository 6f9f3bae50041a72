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

#include <doctest.h>

#include <functional>
#include <random>

#include "blotto/clash.hpp"
#include "blotto/error.hpp"
#include "support/oracles.hpp"
#include "support/structure.hpp"

namespace blotto {
namespace {

using testing::parts_of;
using testing::S;

std::vector<std::vector<int>> cells_of(const ClashMatrix& m) {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(m.n()));
  for (int i = 0; i < m.n(); ++i) {
    for (int j = 0; j < m.n(); ++j) out[static_cast<std::size_t>(i)].push_back(m(i, j));
  }
  return out;
}

// Placements of t non-attacking rooks on a rows x cols board, by recursion
// over rows.
long long count_placements(int rows, int cols, int t, std::vector<bool>& used, int row = 0) {
  if (t == 0) return 1;
  if (rows - row < t) return 0;
  long long total = count_placements(rows, cols, t, used, row + 1);
  for (int c = 0; c < cols; ++c) {
    if (used[static_cast<std::size_t>(c)]) continue;
    used[static_cast<std::size_t>(c)] = true;
    total += count_placements(rows, cols, t - 1, used, row + 1);
    used[static_cast<std::size_t>(c)] = false;
  }
  return total;
}

void check_counts_match_oracle(const SymmetricStrategy& a, const SymmetricStrategy& b) {
  const auto h = rook_counts(ClashMatrix(a, b));
  const auto oracle = testing::permutation_rook_counts(parts_of(a), parts_of(b));
  const int n = a.n();
  for (int w = 0; w <= n; ++w) {
    for (int l = 0; w + l <= n; ++l) {
      auto it = oracle.find({w, l});
      const long long want = it == oracle.end() ? 0 : it->second;
      CHECK_MESSAGE(h.at(w, l) == want, a.to_string() << " vs " << b.to_string() << " at ("
                                                      << w << "," << l << ")");
    }
  }
}

TEST_CASE("clash matrix examples") {
  using V = std::vector<std::vector<int>>;
  CHECK(cells_of(build_clash_matrix(S({3, 1, 0}), S({2, 2, 0}))) ==
        V{{1, 1, 1}, {-1, -1, 1}, {-1, -1, 0}});
  CHECK(cells_of(build_clash_matrix(S({1, 0}), S({1, 0}))) == V{{0, 1}, {-1, 0}});
  CHECK(cells_of(build_clash_matrix(S({2, 2, 0}), S({1, 1, 1}))) ==
        V{{1, 1, 1}, {1, 1, 1}, {-1, -1, -1}});
  CHECK_THROWS_AS(build_clash_matrix(S({1, 0}), S({1, 0, 0})), InvalidArgument);
}

TEST_CASE("knot detection examples") {
  using K = std::vector<Knot>;
  const auto first = detect_knots(build_clash_matrix(S({2, 2, 0}), S({1, 1, 1})));
  CHECK(first.knots == K{{2, 3}, {3, 3}});
  CHECK(first.base_sign == 1);

  // The 1 x 2 block left after the L cut is uniform W, so the descent stops.
  const auto second = detect_knots(build_clash_matrix(S({3, 1, 0}), S({2, 2, 0})));
  CHECK(second.knots == K{{1, 2}, {2, 2}, {3, 3}});
  CHECK(second.base_sign == 1);

  const auto ties = detect_knots(build_clash_matrix(S({1, 1}), S({1, 1})));
  CHECK(ties.knots == K{{2, 2}});
  CHECK(ties.base_sign == 0);

  // Corner in L with every row of the column in L: the leading block is empty.
  const ClashMatrix all_loss(S({1, 0}), S({3, 2}));
  const auto loss = detect_knots(all_loss);
  CHECK(loss.knots == K{{2, 2}});
  CHECK(loss.base_sign == -1);

  const ClashMatrix l_column(S({2, 0}), S({1, 1}));  // [[1,1],[-1,-1]]
  CHECK(detect_knots(l_column).knots == K{{1, 2}, {2, 2}});
}

TEST_CASE("rect_count closed form") {
  CHECK(rect_count(2, 3, 2) == 6);
  CHECK(rect_count(3, 3, 3) == 6);
  for (int i = 0; i <= 4; ++i) {
    for (int j = 0; j <= 4; ++j) CHECK(rect_count(i, j, 0) == 1);
  }
  CHECK(rect_count(2, 1, 2) == 0);
  CHECK(rect_count(-1, 3, 0) == 0);
  for (int i = 0; i <= 5; ++i) {
    for (int j = 0; j <= 5; ++j) {
      for (int t = 0; t <= 5; ++t) {
        std::vector<bool> used(static_cast<std::size_t>(j), false);
        CHECK(rect_count(i, j, t) == count_placements(i, j, t, used));
      }
    }
  }
}

TEST_CASE("rook count examples") {
  // Oracle first: the full 3! enumeration reproduces the frozen tables.
  const auto example = testing::permutation_rook_counts({3, 1, 0}, {2, 2, 0});
  REQUIRE(example == std::map<std::pair<int, int>, long long>{{{1, 1}, 2}, {{2, 1}, 2}, {{1, 2}, 2}});
  const auto h = rook_counts(build_clash_matrix(S({3, 1, 0}), S({2, 2, 0})));
  for (int w = 0; w <= 3; ++w) {
    for (int l = 0; w + l <= 3; ++l) {
      const bool listed = (w == 1 && l == 1) || (w == 2 && l == 1) || (w == 1 && l == 2);
      CHECK(h.at(w, l) == (listed ? 2 : 0));
    }
  }
  CHECK(h.total() == 6);

  const auto loss = rook_counts(build_clash_matrix(S({3, 0, 0}), S({1, 1, 1})));
  CHECK(loss.at(1, 2) == 6);
  CHECK(loss.total() == 6);

  const auto ties = rook_counts(build_clash_matrix(S({1, 1}), S({1, 1})));
  CHECK(ties.at(0, 0) == 2);
  CHECK(ties.total() == 2);
}

TEST_CASE("the nine-battlefield staircase example") {
  const auto a = S({8, 8, 6, 5, 4, 2, 1, 1, 0});
  const auto b = S({8, 8, 8, 7, 5, 3, 3, 1, 0});
  const ClashMatrix m(a, b);
  const auto st = detect_knots(m);
  CHECK(testing::knot_violation(m, st).empty());
  check_counts_match_oracle(a, b);
}

TEST_CASE("rook counts equal permutation counting for every pair, n <= 5, d <= 5") {
  for (int n = 2; n <= 5; ++n) {
    for (int da = 0; da <= 5; ++da) {
      for (int db = 0; db <= 5; ++db) {
        for (const auto& a : enumerate_symmetric_strategies(da, n)) {
          for (const auto& b : enumerate_symmetric_strategies(db, n)) check_counts_match_oracle(a, b);
        }
      }
    }
  }
}

TEST_CASE("rook counts sum to n! on random pairs up to n = 12") {
  std::mt19937 rng(7);
  for (int n = 2; n <= 12; ++n) {
    for (int rep = 0; rep < 20; ++rep) {
      std::uniform_int_distribution<int> budget(0, 2 * n + 3);
      const auto a = testing::random_strategy(budget(rng), n, rng);
      const auto b = testing::random_strategy(budget(rng), n, rng);
      const ClashMatrix m(a, b);
      DpStats stats;
      const auto h = rook_counts(m, &stats);
      CHECK(h.total() == factorial(n));
      for (int w = 0; w <= n; ++w) {
        for (int l = 0; w + l <= n; ++l) CHECK(h.at(w, l) >= 0);
      }
      CHECK(stats.table_entries <= dp_memory_budget(n));
      CHECK(stats.terms <= dp_operation_budget(n));
      CHECK(testing::knot_violation(m, detect_knots(m)).empty());
    }
  }
}

TEST_CASE("payoff examples") {
  const auto mto = AggregationKind::kMoreThanOpponent;
  // Oracle first.
  REQUIRE(testing::permutation_payoff({3, 1, 0}, {2, 2, 0}, mto) == 0);
  REQUIRE(testing::permutation_payoff({2, 2, 0}, {1, 1, 1}, mto) == 1);
  REQUIRE(testing::permutation_payoff({3, 0, 0}, {1, 1, 1}, mto) == -1);

  CHECK(payoff(S({3, 1, 0}), S({2, 2, 0}), mto) == 0);
  CHECK(payoff(S({2, 2, 0}), S({1, 1, 1}), mto) == 1);
  CHECK(payoff(S({3, 0, 0}), S({1, 1, 1}), mto) == -1);
  for (auto agg : {AggregationKind::kBlotto, mto, AggregationKind::kMajoritarian}) {
    CHECK(payoff(S({4, 2, 1, 0}), S({4, 2, 1, 0}), agg) == 0);
  }
}

TEST_CASE("payoff is antisymmetric and blotto is separable") {
  std::mt19937 rng(11);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 2 + rep % 9;
    std::uniform_int_distribution<int> budget(0, 2 * n);
    const auto a = testing::random_strategy(budget(rng), n, rng);
    const auto b = testing::random_strategy(budget(rng), n, rng);
    for (auto agg : {AggregationKind::kBlotto, AggregationKind::kMoreThanOpponent,
                     AggregationKind::kMajoritarian}) {
      CHECK(payoff(a, b, agg) == -payoff(b, a, agg));
    }
    // Each (i, j) clash appears in (n-1)! of the n! permutations.
    BigInt pairwise = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) pairwise += testing::sign_of(a[i] - b[j]);
    }
    CHECK(payoff(a, b, AggregationKind::kBlotto) == Rational(pairwise, n));
  }
}

TEST_CASE("clash matrices keep their staircase shape") {
  std::mt19937 rng(3);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 2 + rep % 9;
    std::uniform_int_distribution<int> budget(0, 3 * n);
    const ClashMatrix m(testing::random_strategy(budget(rng), n, rng),
                        testing::random_strategy(budget(rng), n, rng));
    CHECK(testing::monotone(m));
    CHECK(testing::tie_components_are_rectangles(m));
  }
}

}  // namespace
}  // namespace blotto
