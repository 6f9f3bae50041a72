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

#include <numeric>
#include <set>

#include "blotto/error.hpp"
#include "blotto/game.hpp"
#include "support/oracles.hpp"

namespace blotto {
namespace {

using testing::partitions_by_dedup;
using testing::S;

std::vector<std::vector<int>> as_vectors(const std::vector<SymmetricStrategy>& list) {
  std::vector<std::vector<int>> out;
  for (const auto& s : list) out.push_back(testing::parts_of(s));
  return out;
}

TEST_CASE("enumeration matches the composition oracle on the worked examples") {
  // Oracle first: the dedup of all compositions gives the frozen lists below.
  const std::vector<std::vector<int>> three_three = {{3, 0, 0}, {2, 1, 0}, {1, 1, 1}};
  const std::vector<std::vector<int>> seven_two = {{7, 0}, {6, 1}, {5, 2}, {4, 3}};
  REQUIRE(partitions_by_dedup(3, 3) == three_three);
  REQUIRE(partitions_by_dedup(7, 2) == seven_two);

  CHECK(as_vectors(enumerate_symmetric_strategies(3, 3)) == three_three);
  CHECK(as_vectors(enumerate_symmetric_strategies(7, 2)) == seven_two);
  const auto zero = enumerate_symmetric_strategies(0, 4);
  REQUIRE(zero.size() == 1);
  CHECK(testing::parts_of(zero[0]) == std::vector<int>{0, 0, 0, 0});
}

TEST_CASE("enumerated strategies are sorted, sized and budgeted") {
  for (int d = 0; d <= 12; ++d) {
    for (int n = 2; n <= 8; ++n) {
      const auto list = enumerate_symmetric_strategies(d, n);
      std::set<SymmetricStrategy> unique(list.begin(), list.end());
      CHECK(unique.size() == list.size());
      for (std::size_t k = 0; k < list.size(); ++k) {
        const auto& s = list[k];
        CHECK(s.n() == n);
        CHECK(s.total() == d);
        CHECK(std::is_sorted(s.parts().begin(), s.parts().end(), std::greater<>()));
        if (k > 0) CHECK(list[k - 1] > s);  // reverse-lex
      }
      CHECK(count_symmetric_strategies(d, n) == list.size());
    }
  }
}

TEST_CASE("enumeration equals composition dedup for d <= 10, n <= 6") {
  for (int d = 0; d <= 10; ++d) {
    for (int n = 2; n <= 6; ++n) {
      CHECK(as_vectors(enumerate_symmetric_strategies(d, n)) == partitions_by_dedup(d, n));
    }
  }
}

TEST_CASE("aggregate examples") {
  CHECK(aggregate(AggregationKind::kMoreThanOpponent, 3, 2, 1) == 1);
  CHECK(aggregate(AggregationKind::kMajoritarian, 3, 1, 2) == -1);
  CHECK(aggregate(AggregationKind::kBlotto, 5, 2, 2) == 0);
  // Even n: exactly half is not a majority.
  CHECK(aggregate(AggregationKind::kMajoritarian, 4, 2, 1) == 0);
  CHECK(aggregate(AggregationKind::kMajoritarian, 4, 3, 1) == 1);
  CHECK_THROWS_AS(aggregate(AggregationKind::kBlotto, 3, 2, 2), InvalidArgument);
  CHECK_THROWS_AS(aggregate(AggregationKind::kMoreThanOpponent, 3, -1, 0), InvalidArgument);
}

TEST_CASE("aggregate agrees with the outcome-vector definitions") {
  const AggregationKind kinds[] = {AggregationKind::kBlotto, AggregationKind::kMoreThanOpponent,
                                   AggregationKind::kMajoritarian};
  for (int n = 2; n <= 9; ++n) {
    for (int w = 0; w <= n; ++w) {
      for (int l = 0; w + l <= n; ++l) {
        std::vector<int> u(static_cast<std::size_t>(n), 0);
        for (int k = 0; k < w; ++k) u[static_cast<std::size_t>(k)] = 1;
        for (int k = 0; k < l; ++k) u[static_cast<std::size_t>(w + k)] = -1;
        for (auto kind : kinds) {
          CHECK(aggregate(kind, n, w, l) == testing::aggregate_outcomes(kind, u));
          CHECK(aggregate(kind, n, w, l) == -aggregate(kind, n, l, w));
        }
      }
      if (2 * w <= n) {
        for (auto kind : kinds) CHECK(aggregate(kind, n, w, w) == 0);
      }
    }
  }
}

TEST_CASE("aggregation names round trip") {
  for (auto kind : {AggregationKind::kBlotto, AggregationKind::kMoreThanOpponent,
                    AggregationKind::kMajoritarian}) {
    CHECK(parse_aggregation(to_string(kind)) == kind);
  }
  CHECK_THROWS_AS(parse_aggregation("sum"), InvalidArgument);
}

TEST_CASE("maxass") {
  CHECK(maxass(S({3, 1, 0})) == 3);
  CHECK(maxass(S({1, 1, 1})) == 1);
  const MixedStrategy mixed({{S({2, 2, 0}), 0.5}, {S({4, 0, 0}), 0.5}});
  CHECK(maxass(mixed) == 4);
  CHECK_THROWS_AS(maxass(MixedStrategy()), InvalidArgument);
}

TEST_CASE("strategy construction and parsing") {
  CHECK_THROWS_AS(SymmetricStrategy::from_sorted({1, 2}), InvalidArgument);
  CHECK_THROWS_AS(SymmetricStrategy::from_sorted({2, -1}), InvalidArgument);
  CHECK(SymmetricStrategy::canonical({0, 3, 1}) == S({3, 1, 0}));
  bool reordered = false;
  CHECK(parse_strategy("3,1,0", &reordered) == S({3, 1, 0}));
  CHECK_FALSE(reordered);
  CHECK(parse_strategy("0, 1,3", &reordered) == S({3, 1, 0}));
  CHECK(reordered);
  CHECK_THROWS_AS(parse_strategy("3,,1"), InvalidArgument);
  CHECK_THROWS_AS(parse_strategy("3,x"), InvalidArgument);
  CHECK(S({3, 1, 0}).to_string() == "3,1,0");
}

TEST_CASE("mixed strategy invariants") {
  CHECK_THROWS_AS(MixedStrategy(std::vector<WeightedStrategy>{}), InvalidArgument);
  CHECK_THROWS_AS(MixedStrategy(std::vector<WeightedStrategy>{{S({2, 0}), 0.5}, {S({2, 0}), 0.5}}), InvalidArgument);
  CHECK_THROWS_AS(MixedStrategy(std::vector<WeightedStrategy>{{S({2, 0}), 0.6}, {S({1, 1}), 0.3}}), InvalidArgument);
  CHECK_THROWS_AS(MixedStrategy(std::vector<WeightedStrategy>{{S({2, 0}), 1.0}, {S({1, 1}), 0.0}}), InvalidArgument);

  const std::vector<SymmetricStrategy> list = {S({2, 0}), S({1, 1})};
  const std::vector<double> weights = {3.0, -1e-15};
  const auto xi = MixedStrategy::from_weights(list, weights, 1e-12);
  REQUIRE(xi.size() == 1);
  CHECK(xi.support()[0].probability == 1.0);
}

TEST_CASE("most even assignment") {
  CHECK(most_even_assignment(7, 3) == S({3, 2, 2}));
  CHECK(most_even_assignment(6, 3) == S({2, 2, 2}));
  CHECK(most_even_assignment(2, 4) == S({1, 1, 0, 0}));
  CHECK(most_even_assignment(0, 2) == S({0, 0}));
}

TEST_CASE("game spec validation") {
  CHECK_NOTHROW(GameSpec{0, 0, 2, AggregationKind::kBlotto}.validate());
  CHECK_THROWS_AS(GameSpec({1, 1, 1, AggregationKind::kBlotto}).validate(), InvalidArgument);
  CHECK_THROWS_AS(GameSpec({-1, 1, 3, AggregationKind::kBlotto}).validate(), InvalidArgument);
}

}  // namespace
}  // namespace blotto
