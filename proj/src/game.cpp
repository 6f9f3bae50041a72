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

#include "blotto/game.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <limits>
#include <set>
#include <string>

#include "blotto/error.hpp"

namespace blotto {

std::string_view to_string(AggregationKind kind) {
  switch (kind) {
    case AggregationKind::kBlotto:
      return "blotto";
    case AggregationKind::kMoreThanOpponent:
      return "mto";
    case AggregationKind::kMajoritarian:
      return "majoritarian";
  }
  return "?";
}

AggregationKind parse_aggregation(std::string_view name) {
  if (name == "blotto") return AggregationKind::kBlotto;
  if (name == "mto") return AggregationKind::kMoreThanOpponent;
  if (name == "majoritarian") return AggregationKind::kMajoritarian;
  throw InvalidArgument("unknown aggregation '" + std::string(name) +
                        "' (expected blotto, mto or majoritarian)");
}

int aggregate(AggregationKind kind, int n, int k_win, int k_loss) {
  if (k_win < 0 || k_loss < 0 || k_win + k_loss > n) {
    throw InvalidArgument("aggregate: need 0 <= k_win, k_loss and k_win + k_loss <= n");
  }
  switch (kind) {
    case AggregationKind::kBlotto:
      return k_win - k_loss;
    case AggregationKind::kMoreThanOpponent:
      return (k_win > k_loss) - (k_win < k_loss);
    case AggregationKind::kMajoritarian:
      // Strict majority: 2k > n.
      return (2 * k_win > n) - (2 * k_loss > n);
  }
  return 0;
}

void GameSpec::validate() const {
  if (n < 2) throw InvalidArgument("battlefield count n must be >= 2");
  if (d_a < 0 || d_b < 0) throw InvalidArgument("resource budgets must be non-negative");
}

SymmetricStrategy SymmetricStrategy::from_sorted(std::vector<int> parts) {
  if (parts.empty()) throw InvalidArgument("strategy needs at least one battlefield");
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) throw InvalidArgument("strategy parts must be non-negative");
    if (i > 0 && parts[i] > parts[i - 1]) {
      throw InvalidArgument("strategy parts must be non-increasing");
    }
  }
  return SymmetricStrategy(std::move(parts));
}

SymmetricStrategy SymmetricStrategy::canonical(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return from_sorted(std::move(parts));
}

int SymmetricStrategy::total() const {
  int sum = 0;
  for (int p : parts_) sum += p;
  return sum;
}

std::string SymmetricStrategy::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

SymmetricStrategy parse_strategy(std::string_view text, bool* reordered) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string_view::npos) next = text.size();
    std::string_view item = text.substr(pos, next - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    int value = 0;
    auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || end != item.data() + item.size()) {
      throw InvalidArgument("cannot parse strategy component '" + std::string(item) + "'");
    }
    parts.push_back(value);
    pos = next + 1;
  }
  const bool sorted = std::is_sorted(parts.begin(), parts.end(), std::greater<>());
  if (reordered != nullptr) *reordered = !sorted;
  return SymmetricStrategy::canonical(std::move(parts));
}

MixedStrategy::MixedStrategy(std::vector<WeightedStrategy> support)
    : support_(std::move(support)) {
  if (support_.empty()) throw InvalidArgument("mixed strategy needs a non-empty support");
  double total = 0.0;
  std::set<SymmetricStrategy> seen;
  for (const auto& [s, p] : support_) {
    if (!(p > 0.0) || p > 1.0 + 1e-12) {
      throw InvalidArgument("mixed strategy probabilities must lie in (0, 1]");
    }
    if (!seen.insert(s).second) {
      throw InvalidArgument("duplicate strategy in mixed support: " + s.to_string());
    }
    if (s.n() != support_.front().strategy.n()) {
      throw InvalidArgument("mixed support strategies must share n");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw InvalidArgument("mixed strategy probabilities must sum to 1");
  }
}

MixedStrategy MixedStrategy::point_mass(SymmetricStrategy s) {
  return MixedStrategy({WeightedStrategy{std::move(s), 1.0}});
}

MixedStrategy MixedStrategy::from_weights(std::span<const SymmetricStrategy> strategies,
                                          std::span<const double> weights, double drop_below) {
  if (strategies.size() != weights.size()) {
    throw InvalidArgument("strategy and weight counts differ");
  }
  double total = 0.0;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    if (weights[k] > drop_below) total += weights[k];
  }
  if (!(total > 0.0)) throw InvalidArgument("no positive weight survives");
  std::vector<WeightedStrategy> support;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    if (weights[k] > drop_below) support.push_back({strategies[k], weights[k] / total});
  }
  // Renormalize a second time so the sum lands within rounding of 1.
  double sum = 0.0;
  for (const auto& w : support) sum += w.probability;
  for (auto& w : support) w.probability /= sum;
  return MixedStrategy(std::move(support));
}

int maxass(const SymmetricStrategy& s) { return s.max_part(); }

int maxass(const MixedStrategy& xi) {
  if (xi.empty()) throw InvalidArgument("maxass of an empty mixed strategy");
  int best = 0;
  for (const auto& w : xi.support()) best = std::max(best, w.strategy.max_part());
  return best;
}

std::vector<SymmetricStrategy> enumerate_symmetric_strategies(int d, int n) {
  if (d < 0) throw InvalidArgument("resource budget must be non-negative");
  if (n < 1) throw InvalidArgument("battlefield count must be positive");
  std::vector<SymmetricStrategy> out;
  std::vector<int> parts(static_cast<std::size_t>(n), 0);
  // Fill position k with a part no larger than `cap`, leaving `rest` for the
  // remaining n - k positions. Larger parts first gives reverse-lex order.
  std::function<void(int, int, int)> fill = [&](int k, int rest, int cap) {
    if (k == n - 1) {
      parts[static_cast<std::size_t>(k)] = rest;
      out.push_back(SymmetricStrategy::from_sorted(parts));
      return;
    }
    const int slots = n - k;
    const int lo = (rest + slots - 1) / slots;
    for (int v = std::min(rest, cap); v >= lo; --v) {
      parts[static_cast<std::size_t>(k)] = v;
      fill(k + 1, rest - v, v);
    }
  };
  fill(0, d, d);
  return out;
}

std::uint64_t count_symmetric_strategies(int d, int n) {
  if (d < 0 || n < 1) return 0;
  // p(x, <= k parts) = p(x, <= k-1) + p(x - k, <= k), computed column by column.
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> ways(static_cast<std::size_t>(d) + 1, 0);
  ways[0] = 1;
  for (int part = 1; part <= n; ++part) {
    for (int x = part; x <= d; ++x) {
      auto& w = ways[static_cast<std::size_t>(x)];
      const auto add = ways[static_cast<std::size_t>(x - part)];
      w = (w > kMax - add) ? kMax : w + add;
    }
  }
  return ways[static_cast<std::size_t>(d)];
}

SymmetricStrategy most_even_assignment(int d, int n) {
  if (d < 0 || n < 1) throw InvalidArgument("most_even_assignment: bad arguments");
  std::vector<int> parts(static_cast<std::size_t>(n), d / n);
  for (int k = 0; k < d % n; ++k) parts[static_cast<std::size_t>(k)] += 1;
  return SymmetricStrategy::from_sorted(std::move(parts));
}

}  // namespace blotto
