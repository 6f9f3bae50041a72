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

#include <algorithm>
#include <random>

#include "blotto/brute.hpp"
#include "blotto/error.hpp"
#include "support/oracles.hpp"

namespace blotto {
namespace {

using testing::parts_of;
using testing::S;

const AggregationKind kMto = AggregationKind::kMoreThanOpponent;

TEST_CASE("naive payoff examples") {
  CHECK(naive_payoff(S({3, 1, 0}), S({2, 2, 0}), kMto) == 0);
  CHECK(naive_payoff(S({2, 2, 0}), S({1, 1, 1}), AggregationKind::kMajoritarian) == 1);
  CHECK(naive_payoff(S({1, 1}), S({1, 1}), AggregationKind::kBlotto) == 0);
  CHECK(naive_payoff(S({1, 0}), S({2, 0}), kMto) == Rational(-1, 2));
}

TEST_CASE("naive payoff over distinct arrangements equals the full n! average") {
  std::mt19937 rng(5);
  for (int rep = 0; rep < 150; ++rep) {
    const int n = 2 + rep % 6;
    std::uniform_int_distribution<int> budget(0, 2 * n);
    const auto a = testing::random_strategy(budget(rng), n, rng);
    const auto b = testing::random_strategy(budget(rng), n, rng);
    for (auto agg : {AggregationKind::kBlotto, kMto, AggregationKind::kMajoritarian}) {
      CHECK(naive_payoff(a, b, agg) == testing::permutation_payoff(parts_of(a), parts_of(b), agg));
    }
  }
}

TEST_CASE("brute rook count examples") {
  const auto example = brute_rook_counts(ClashMatrix(S({3, 1, 0}), S({2, 2, 0})));
  CHECK(example.at(1, 1) == 2);
  CHECK(example.at(2, 1) == 2);
  CHECK(example.at(1, 2) == 2);
  CHECK(example.total() == 6);

  const auto ties = brute_rook_counts(ClashMatrix(S({1, 1, 1, 1}), S({1, 1, 1, 1})));
  CHECK(ties.at(0, 0) == 24);
  const auto wins = brute_rook_counts(ClashMatrix(S({2, 2, 2, 2}), S({1, 1, 1, 1})));
  CHECK(wins.at(4, 0) == 24);
}

TEST_CASE("oracle guards are hard errors") {
  const auto big = most_even_assignment(11, 11);
  CHECK_THROWS_AS(naive_payoff(big, big, kMto), SizeLimitError);
  const auto nine = most_even_assignment(9, 9);
  CHECK_THROWS_AS(brute_rook_counts(ClashMatrix(nine, nine)), SizeLimitError);
  const auto xi = MixedStrategy::point_mass(most_even_assignment(10, 10));
  CHECK(count_compositions(30, 10) > kFullGameMaxCompositions);
  CHECK_THROWS_AS(full_game_best_response(xi, 30, kMto), SizeLimitError);
}

TEST_CASE("full game best response examples") {
  CHECK(count_compositions(4, 3) == 15);
  const auto r1 = full_game_best_response(MixedStrategy::point_mass(S({1, 1, 1})), 4, kMto);
  CHECK(r1.value == doctest::Approx(1.0));
  auto sorted = r1.composition;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  CHECK(sorted == std::vector<int>{2, 2, 0});

  const auto r2 = full_game_best_response(MixedStrategy::point_mass(S({2, 0})), 2, kMto);
  CHECK(r2.value == doctest::Approx(0.0));

  const auto r3 = full_game_best_response(MixedStrategy::point_mass(S({0, 0})), 0, kMto);
  CHECK(r3.value == 0.0);
  CHECK(r3.composition == std::vector<int>{0, 0});
}

TEST_CASE("composition payoff is invariant under reordering the composition") {
  std::mt19937 rng(9);
  for (int rep = 0; rep < 60; ++rep) {
    const int n = 2 + rep % 4;
    const auto s = testing::random_strategy(n + 2, n, rng);
    auto z = parts_of(testing::random_strategy(n + 1, n, rng));
    std::shuffle(z.begin(), z.end(), rng);
    const Rational base = composition_payoff(z, s, AggregationKind::kMajoritarian);
    std::sort(z.begin(), z.end());
    do {
      CHECK(composition_payoff(z, s, AggregationKind::kMajoritarian) == base);
    } while (std::next_permutation(z.begin(), z.end()));
  }
}

}  // namespace
}  // namespace blotto
