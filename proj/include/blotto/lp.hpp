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

#ifndef BLOTTO_LP_HPP_
#define BLOTTO_LP_HPP_

#include <span>
#include <vector>

#include "blotto/dense_matrix.hpp"

namespace blotto {

// Minimax solution of a zero-sum matrix game; the row player maximizes.
struct ZeroSumSolution {
  double value = 0.0;
  std::vector<double> row;
  std::vector<double> col;
  int pivots = 0;
};

// Anything that can solve a matrix game. Implementations must return
// probability vectors (non-negative, summing to one).
class ZeroSumBackend {
 public:
  virtual ~ZeroSumBackend() = default;
  virtual ZeroSumSolution solve(const DenseMatrix& payoff) const = 0;
};

// Dense tableau simplex on the column player's LP
//   max 1'y  s.t.  B y <= 1, y >= 0,  B = payoff - min(payoff) + 1,
// with the row strategy read off the slack reduced costs.
class SimplexBackend final : public ZeroSumBackend {
 public:
  ZeroSumSolution solve(const DenseMatrix& payoff) const override;
};

const ZeroSumBackend& default_backend();

ZeroSumSolution solve_zero_sum(const DenseMatrix& payoff,
                               const ZeroSumBackend& backend = default_backend());

// Guarantees of a strategy pair: `lower` is the worst column reply to row,
// `upper` is the best row reply to col. lower <= game value <= upper.
struct Certificate {
  double lower = 0.0;
  double upper = 0.0;
  double gap() const { return upper - lower; }
};

Certificate certify(const DenseMatrix& payoff, std::span<const double> row,
                    std::span<const double> col);

}  // namespace blotto

#endif  // BLOTTO_LP_HPP_
