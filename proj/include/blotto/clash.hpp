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

#ifndef BLOTTO_CLASH_HPP_
#define BLOTTO_CLASH_HPP_

#include <cstdint>
#include <vector>

#include "blotto/game.hpp"
#include "blotto/numeric.hpp"

namespace blotto {

// n x n sign matrix: cell(i, j) = sign(a[i] - b[j]) for two non-increasing
// allocation vectors. +1 is area W, 0 is area T, -1 is area L. Indices are
// zero based; rows are non-decreasing left to right and columns are
// non-increasing top to bottom.
class ClashMatrix {
 public:
  ClashMatrix(const SymmetricStrategy& a, const SymmetricStrategy& b);
  // Raw cells, row major. No structural validation beyond the shape.
  ClashMatrix(int n, std::vector<std::int8_t> cells);

  int n() const { return n_; }
  int operator()(int i, int j) const { return cells_[static_cast<std::size_t>(i * n_ + j)]; }

  // True when the first rows x cols block holds a single value (vacuously
  // true for an empty block).
  bool uniform_block(int rows, int cols) const;

 private:
  int n_ = 0;
  std::vector<std::int8_t> cells_;
};

ClashMatrix build_clash_matrix(const SymmetricStrategy& a, const SymmetricStrategy& b);

// A knot is the size of a leading submatrix (first `rows` rows and first
// `cols` columns).
struct Knot {
  int rows = 0;
  int cols = 0;
  friend bool operator==(const Knot&, const Knot&) = default;
};

// Ascending knots ending at (n, n). The block at knots.front() is uniform
// with value base_sign (0 when it is empty). Between consecutive knots
// (i', j') -> (i, j) the difference decomposes into an L band (rows
// i'+1..i, cols 1..j'), a T band (rows i'+1..i, cols j'+1..j) and a W band
// (rows 1..i', cols j'+1..j); the L and W corners are the degenerate cases
// j' = j and i' = i.
struct KnotStaircase {
  std::vector<Knot> knots;
  int base_sign = 0;
};

KnotStaircase detect_knots(const ClashMatrix& m);

// Placements of t non-attacking rooks on a uniform rows x cols board:
// C(cols, t) * C(rows, t) * t!. Zero when t exceeds either side or any
// argument is negative.
BigInt rect_count(int rows, int cols, int t);

// h(k_win, k_loss): number of permutations placing exactly k_win rooks in W
// and k_loss in L.
class RookCountTable {
 public:
  explicit RookCountTable(int n);

  int n() const { return n_; }
  const BigInt& at(int k_win, int k_loss) const { return counts_[index(k_win, k_loss)]; }
  BigInt& at(int k_win, int k_loss) { return counts_[index(k_win, k_loss)]; }
  BigInt total() const;

  friend bool operator==(const RookCountTable&, const RookCountTable&) = default;

 private:
  std::size_t index(int k_win, int k_loss) const {
    return static_cast<std::size_t>(k_win * (n_ + 1) + k_loss);
  }
  int n_;
  std::vector<BigInt> counts_;
};

// Work counters of one rook-count evaluation.
struct DpStats {
  std::size_t knots = 0;
  // Table cells allocated across all knot slabs.
  std::size_t table_entries = 0;
  // Multiply-accumulate steps performed.
  std::uint64_t terms = 0;
};

// Non-asymptotic budgets for one evaluation at size n:
// 2n(n+1)^3 table cells and 4 * 2n(n+1)^3 * C(n+3, 3) arithmetic steps.
std::uint64_t dp_memory_budget(int n);
std::uint64_t dp_operation_budget(int n);

RookCountTable rook_counts(const ClashMatrix& m, DpStats* stats = nullptr);

// (sum over k of h(k_win, k_loss) * f_n(k_win, k_loss)) / n!.
Rational payoff_from_counts(const RookCountTable& h, AggregationKind agg);

// Exact payoff to the owner of `a` from the symmetric profile (a, b).
Rational payoff(const SymmetricStrategy& a, const SymmetricStrategy& b, AggregationKind agg,
                DpStats* stats = nullptr);

}  // namespace blotto

#endif  // BLOTTO_CLASH_HPP_
