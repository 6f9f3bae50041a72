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

#include "blotto/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "blotto/error.hpp"

namespace blotto {

namespace {

constexpr double kPivotEps = 1e-12;
// After this many consecutive degenerate pivots switch to Bland's rule.
constexpr int kDegenerateLimit = 50;

void normalize(std::vector<double>& v) {
  double sum = 0.0;
  for (double& x : v) {
    if (x < 0.0) x = 0.0;
    sum += x;
  }
  if (!(sum > 0.0)) throw InternalError("simplex produced an all-zero strategy");
  for (double& x : v) x /= sum;
}

}  // namespace

ZeroSumSolution SimplexBackend::solve(const DenseMatrix& payoff) const {
  const int rows = payoff.rows();
  const int cols = payoff.cols();
  if (rows == 0 || cols == 0) throw InvalidArgument("zero-sum solve: empty matrix");
  double lo = std::numeric_limits<double>::infinity();
  for (double v : payoff.data()) {
    if (!std::isfinite(v)) throw InvalidArgument("zero-sum solve: non-finite entry");
    lo = std::min(lo, v);
  }
  const double shift = 1.0 - lo;  // B = payoff + shift >= 1

  // Tableau columns: y (cols), slacks (rows), rhs. Last row is the objective.
  const int width = cols + rows + 1;
  const int rhs = width - 1;
  std::vector<double> t(static_cast<std::size_t>(rows + 1) * width, 0.0);
  auto at = [&](int r, int c) -> double& { return t[static_cast<std::size_t>(r) * width + c]; };
  std::vector<int> basis(static_cast<std::size_t>(rows));
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) at(r, c) = payoff(r, c) + shift;
    at(r, cols + r) = 1.0;
    at(r, rhs) = 1.0;
    basis[static_cast<std::size_t>(r)] = cols + r;
  }
  for (int c = 0; c < cols; ++c) at(rows, c) = -1.0;

  ZeroSumSolution out;
  int degenerate_run = 0;
  const int max_pivots = 50 * (rows + cols) + 1000;
  while (true) {
    const bool bland = degenerate_run > kDegenerateLimit;
    int enter = -1;
    double best = -kPivotEps;
    for (int c = 0; c < rhs; ++c) {
      const double rc = at(rows, c);
      if (rc < best) {
        enter = c;
        best = rc;
        if (bland) break;
      }
    }
    if (enter < 0) break;

    int leave = -1;
    double ratio = std::numeric_limits<double>::infinity();
    for (int r = 0; r < rows; ++r) {
      const double a = at(r, enter);
      if (a <= kPivotEps) continue;
      const double q = at(r, rhs) / a;
      if (q < ratio - 1e-15 ||
          (q <= ratio + 1e-15 && leave >= 0 &&
           basis[static_cast<std::size_t>(r)] < basis[static_cast<std::size_t>(leave)])) {
        ratio = q;
        leave = r;
      }
    }
    // B > 0 keeps the LP bounded.
    if (leave < 0) throw InternalError("simplex: unbounded column player LP");
    degenerate_run = ratio <= 1e-15 ? degenerate_run + 1 : 0;

    const double pivot = at(leave, enter);
    for (int c = 0; c < width; ++c) at(leave, c) /= pivot;
    for (int r = 0; r <= rows; ++r) {
      if (r == leave) continue;
      const double f = at(r, enter);
      if (f == 0.0) continue;
      for (int c = 0; c < width; ++c) at(r, c) -= f * at(leave, c);
    }
    basis[static_cast<std::size_t>(leave)] = enter;
    if (++out.pivots > max_pivots) throw InternalError("simplex: pivot limit reached");
  }

  std::vector<double> y(static_cast<std::size_t>(cols), 0.0);
  for (int r = 0; r < rows; ++r) {
    const int b = basis[static_cast<std::size_t>(r)];
    if (b < cols) y[static_cast<std::size_t>(b)] = at(r, rhs);
  }
  std::vector<double> u(static_cast<std::size_t>(rows), 0.0);
  for (int r = 0; r < rows; ++r) u[static_cast<std::size_t>(r)] = at(rows, cols + r);
  const double z = at(rows, rhs);
  if (!(z > 0.0)) throw InternalError("simplex: non-positive optimum");

  out.value = 1.0 / z - shift;
  out.col = std::move(y);
  out.row = std::move(u);
  normalize(out.col);
  normalize(out.row);
  return out;
}

const ZeroSumBackend& default_backend() {
  static const SimplexBackend backend;
  return backend;
}

ZeroSumSolution solve_zero_sum(const DenseMatrix& payoff, const ZeroSumBackend& backend) {
  return backend.solve(payoff);
}

Certificate certify(const DenseMatrix& payoff, std::span<const double> row,
                    std::span<const double> col) {
  Certificate cert;
  cert.lower = std::numeric_limits<double>::infinity();
  for (int c = 0; c < payoff.cols(); ++c) {
    double v = 0.0;
    for (int r = 0; r < payoff.rows(); ++r) v += row[static_cast<std::size_t>(r)] * payoff(r, c);
    cert.lower = std::min(cert.lower, v);
  }
  cert.upper = -std::numeric_limits<double>::infinity();
  for (int r = 0; r < payoff.rows(); ++r) {
    double v = 0.0;
    for (int c = 0; c < payoff.cols(); ++c) v += payoff(r, c) * col[static_cast<std::size_t>(c)];
    cert.upper = std::max(cert.upper, v);
  }
  return cert;
}

}  // namespace blotto
