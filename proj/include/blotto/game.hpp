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

#ifndef BLOTTO_GAME_HPP_
#define BLOTTO_GAME_HPP_

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace blotto {

enum class AggregationKind { kBlotto, kMoreThanOpponent, kMajoritarian };

std::string_view to_string(AggregationKind kind);
// Accepts "blotto", "mto" and "majoritarian".
AggregationKind parse_aggregation(std::string_view name);

// f_n(k_win, k_loss): the aggregated payoff when k_win battlefields are won
// and k_loss are lost out of n. Every kind is antisymmetric in (k_win,
// k_loss) and integer valued.
int aggregate(AggregationKind kind, int n, int k_win, int k_loss);

enum class Player { kA, kB };

inline Player opponent(Player p) { return p == Player::kA ? Player::kB : Player::kA; }

struct GameSpec {
  int d_a = 0;
  int d_b = 0;
  int n = 2;
  AggregationKind agg = AggregationKind::kMoreThanOpponent;

  // Throws InvalidArgument unless n >= 2 and both budgets are non-negative.
  void validate() const;
  int budget(Player p) const { return p == Player::kA ? d_a : d_b; }

  friend bool operator==(const GameSpec&, const GameSpec&) = default;
};

// Allocation to n identical battlefields, kept sorted non-increasing. The
// sorted vector is the canonical representative of the symmetric strategy
// that plays every permutation uniformly.
class SymmetricStrategy {
 public:
  SymmetricStrategy() = default;

  // Requires non-negative, non-increasing parts and size >= 1.
  static SymmetricStrategy from_sorted(std::vector<int> parts);
  // Sorts the parts first. Requires non-negative parts.
  static SymmetricStrategy canonical(std::vector<int> parts);

  int n() const { return static_cast<int>(parts_.size()); }
  int total() const;
  int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }
  // Largest single-battlefield assignment.
  int max_part() const { return parts_.empty() ? 0 : parts_.front(); }
  std::span<const int> parts() const { return parts_; }

  // Comma separated parts, e.g. "3,1,0".
  std::string to_string() const;

  friend bool operator==(const SymmetricStrategy&, const SymmetricStrategy&) = default;
  friend auto operator<=>(const SymmetricStrategy&, const SymmetricStrategy&) = default;

 private:
  explicit SymmetricStrategy(std::vector<int> parts) : parts_(std::move(parts)) {}
  std::vector<int> parts_;
};

// Parses "3,1,0". Sets *reordered when the input was not already sorted.
SymmetricStrategy parse_strategy(std::string_view text, bool* reordered = nullptr);

struct WeightedStrategy {
  SymmetricStrategy strategy;
  double probability = 0.0;
};

// Finite-support distribution over symmetric strategies. Support entries are
// distinct, strictly positive and sum to one within 1e-12.
class MixedStrategy {
 public:
  MixedStrategy() = default;

  // Validates the invariants; throws InvalidArgument otherwise.
  explicit MixedStrategy(std::vector<WeightedStrategy> support);

  static MixedStrategy point_mass(SymmetricStrategy s);
  // Drops weights <= drop_below, renormalizes the rest. Weights may be
  // slightly negative LP output; at least one weight must survive.
  static MixedStrategy from_weights(std::span<const SymmetricStrategy> strategies,
                                    std::span<const double> weights,
                                    double drop_below = 0.0);

  const std::vector<WeightedStrategy>& support() const { return support_; }
  bool empty() const { return support_.empty(); }
  std::size_t size() const { return support_.size(); }

 private:
  std::vector<WeightedStrategy> support_;
};

int maxass(const SymmetricStrategy& s);
// Max over the support. Throws InvalidArgument on an empty support.
int maxass(const MixedStrategy& xi);

// All partitions of d into at most n parts, zero padded to length n, in
// reverse-lexicographic order.
std::vector<SymmetricStrategy> enumerate_symmetric_strategies(int d, int n);
// Same count without materializing, saturating at UINT64_MAX.
std::uint64_t count_symmetric_strategies(int d, int n);

// Parts ceil(d/n) on d mod n battlefields and floor(d/n) elsewhere.
SymmetricStrategy most_even_assignment(int d, int n);

}  // namespace blotto

#endif  // BLOTTO_GAME_HPP_
