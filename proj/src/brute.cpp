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

#include "blotto/brute.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <string>

#include "blotto/error.hpp"

namespace blotto {

namespace {

int outcome_value(const std::vector<int>& mine, const std::vector<int>& theirs,
                  AggregationKind agg) {
  const int n = static_cast<int>(mine.size());
  int wins = 0;
  int losses = 0;
  for (int i = 0; i < n; ++i) {
    const int a = mine[static_cast<std::size_t>(i)];
    const int b = theirs[static_cast<std::size_t>(i)];
    wins += a > b;
    losses += a < b;
  }
  return aggregate(agg, n, wins, losses);
}

// Sum of f over distinct arrangements of s against z, with the count.
std::pair<BigInt, BigInt> arrangement_sum(const std::vector<int>& z, const SymmetricStrategy& s,
                                          AggregationKind agg) {
  std::vector<int> perm(s.parts().begin(), s.parts().end());
  std::sort(perm.begin(), perm.end());
  BigInt sum = 0;
  BigInt count = 0;
  // next_permutation visits each distinct arrangement of a multiset once;
  // each stands for prod(multiplicity!) of the n! permutations.
  do {
    sum += outcome_value(z, perm, agg);
    count += 1;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {sum, count};
}

}  // namespace

Rational naive_payoff(const SymmetricStrategy& a, const SymmetricStrategy& b,
                      AggregationKind agg) {
  if (a.n() != b.n()) throw InvalidArgument("naive_payoff: strategies have different n");
  if (a.n() > kNaivePayoffMaxN) {
    throw SizeLimitError("naive_payoff: n = " + std::to_string(a.n()) + " exceeds guard " +
                         std::to_string(kNaivePayoffMaxN));
  }
  const std::vector<int> z(a.parts().begin(), a.parts().end());
  auto [sum, count] = arrangement_sum(z, b, agg);
  return Rational(sum, count);
}

RookCountTable brute_rook_counts(const ClashMatrix& m) {
  const int n = m.n();
  if (n > kBruteRookMaxN) {
    throw SizeLimitError("brute_rook_counts: n = " + std::to_string(n) + " exceeds guard " +
                         std::to_string(kBruteRookMaxN));
  }
  RookCountTable out(n);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int wins = 0;
    int losses = 0;
    for (int i = 0; i < n; ++i) {
      const int v = m(i, perm[static_cast<std::size_t>(i)]);
      wins += v == 1;
      losses += v == -1;
    }
    out.at(wins, losses) += 1;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

Rational composition_payoff(const std::vector<int>& z, const SymmetricStrategy& s,
                            AggregationKind agg) {
  if (static_cast<int>(z.size()) != s.n()) {
    throw InvalidArgument("composition_payoff: length mismatch");
  }
  auto [sum, count] = arrangement_sum(z, s, agg);
  return Rational(sum, count);
}

std::uint64_t count_compositions(int d, int n) {
  const BigInt c = binomial(n + d - 1, n - 1);
  if (c > BigInt(std::numeric_limits<std::uint64_t>::max())) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return c.convert_to<std::uint64_t>();
}

FullGameResponse full_game_best_response(const MixedStrategy& xi, int d_opp, AggregationKind agg) {
  if (xi.empty()) throw InvalidArgument("full_game_best_response: empty support");
  if (d_opp < 0) throw InvalidArgument("full_game_best_response: negative budget");
  const int n = xi.support().front().strategy.n();
  const std::uint64_t total = count_compositions(d_opp, n);
  if (total > kFullGameMaxCompositions) {
    throw SizeLimitError("full_game_best_response: " + std::to_string(total) +
                         " compositions exceed guard");
  }
  FullGameResponse best;
  bool have = false;
  std::vector<int> z(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> scan = [&](int k, int rest) {
    if (k == n - 1) {
      z[static_cast<std::size_t>(k)] = rest;
      double value = 0.0;
      for (const auto& w : xi.support()) {
        value += w.probability * to_double(composition_payoff(z, w.strategy, agg));
      }
      if (!have || value > best.value) {
        best = {z, value};
        have = true;
      }
      return;
    }
    for (int v = rest; v >= 0; --v) {
      z[static_cast<std::size_t>(k)] = v;
      scan(k + 1, rest - v);
    }
  };
  scan(0, d_opp);
  return best;
}

}  // namespace blotto
