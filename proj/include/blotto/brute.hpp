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

#ifndef BLOTTO_BRUTE_HPP_
#define BLOTTO_BRUTE_HPP_

// Reference implementations that enumerate permutations directly. They share
// nothing with the rook-count dynamic program and exist to certify it.

#include <cstdint>
#include <vector>

#include "blotto/clash.hpp"
#include "blotto/game.hpp"
#include "blotto/numeric.hpp"

namespace blotto {

inline constexpr int kNaivePayoffMaxN = 10;
inline constexpr int kBruteRookMaxN = 8;
inline constexpr std::uint64_t kFullGameMaxCompositions = 1'000'000;

// Average of f over the distinct arrangements of b against a fixed a.
// Throws SizeLimitError for n > kNaivePayoffMaxN.
Rational naive_payoff(const SymmetricStrategy& a, const SymmetricStrategy& b,
                      AggregationKind agg);

// Counts (K_W, K_L) over all n! permutations. Throws SizeLimitError for
// n > kBruteRookMaxN.
RookCountTable brute_rook_counts(const ClashMatrix& m);

// Payoff to an ordered allocation z against the symmetric strategy sigma(s).
Rational composition_payoff(const std::vector<int>& z, const SymmetricStrategy& s,
                            AggregationKind agg);

struct FullGameResponse {
  std::vector<int> composition;
  double value = 0.0;
};

// Best ordered allocation of d_opp resources against the symmetric mixed
// strategy xi, scanning every composition of d_opp into n parts. The first
// maximizer in lexicographically decreasing order wins ties.
FullGameResponse full_game_best_response(const MixedStrategy& xi, int d_opp, AggregationKind agg);

std::uint64_t count_compositions(int d, int n);

}  // namespace blotto

#endif  // BLOTTO_BRUTE_HPP_
