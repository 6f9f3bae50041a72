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

#include "blotto/clash.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "blotto/error.hpp"

namespace blotto {

ClashMatrix::ClashMatrix(const SymmetricStrategy& a, const SymmetricStrategy& b) : n_(a.n()) {
  if (a.n() != b.n()) throw InvalidArgument("clash matrix: strategies have different n");
  cells_.resize(static_cast<std::size_t>(n_) * n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      cells_[static_cast<std::size_t>(i * n_ + j)] =
          static_cast<std::int8_t>((a[i] > b[j]) - (a[i] < b[j]));
    }
  }
}

ClashMatrix::ClashMatrix(int n, std::vector<std::int8_t> cells) : n_(n), cells_(std::move(cells)) {
  if (n < 1 || cells_.size() != static_cast<std::size_t>(n) * n) {
    throw InvalidArgument("clash matrix: cell count does not match n*n");
  }
}

bool ClashMatrix::uniform_block(int rows, int cols) const {
  if (rows == 0 || cols == 0) return true;
  const int v = (*this)(0, 0);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      if ((*this)(i, j) != v) return false;
    }
  }
  return true;
}

ClashMatrix build_clash_matrix(const SymmetricStrategy& a, const SymmetricStrategy& b) {
  return ClashMatrix(a, b);
}

KnotStaircase detect_knots(const ClashMatrix& m) {
  // 1-based view: cell(r, c) for r, c in [1, n].
  auto cell = [&](int r, int c) { return m(r - 1, c - 1); };
  std::vector<Knot> descent;
  int i = m.n();
  int j = m.n();
  while (!m.uniform_block(i, j)) {
    descent.push_back({i, j});
    int next_i = i;
    int next_j = j;
    switch (cell(i, j)) {
      case -1:  // L corner: drop the trailing rows that are all L.
        next_i = 0;
        for (int r = i; r >= 1; --r) {
          if (cell(r, j) != -1) {
            next_i = r;
            break;
          }
        }
        break;
      case 1:  // W corner: drop the trailing columns that are all W.
        next_j = 0;
        for (int c = j; c >= 1; --c) {
          if (cell(i, c) != 1) {
            next_j = c;
            break;
          }
        }
        break;
      default:  // T corner: cover the whole tie rectangle at the corner.
        next_i = 0;
        for (int r = i; r >= 1; --r) {
          if (cell(r, j) == 1) {
            next_i = r;
            break;
          }
        }
        next_j = 0;
        for (int c = j; c >= 1; --c) {
          if (cell(i, c) == -1) {
            next_j = c;
            break;
          }
        }
        break;
    }
    i = next_i;
    j = next_j;
  }
  KnotStaircase out;
  out.base_sign = (i == 0 || j == 0) ? 0 : cell(1, 1);
  out.knots.reserve(descent.size() + 1);
  out.knots.push_back({i, j});
  for (auto it = descent.rbegin(); it != descent.rend(); ++it) out.knots.push_back(*it);
  return out;
}

BigInt rect_count(int rows, int cols, int t) {
  if (rows < 0 || cols < 0 || t < 0 || t > rows || t > cols) return 0;
  // rows! / (rows - t)! * C(cols, t)
  BigInt out = binomial(cols, t);
  for (int k = 0; k < t; ++k) out *= rows - k;
  return out;
}

namespace {

// rect_count(a, b, t) for a, b, t in [0, n], shared across calls per n.
class RectTable {
 public:
  explicit RectTable(int n) : n_(n), values_(static_cast<std::size_t>(n + 1) * (n + 1) * (n + 1)) {
    for (int a = 0; a <= n; ++a) {
      for (int b = 0; b <= n; ++b) {
        for (int t = 0; t <= n; ++t) values_[index(a, b, t)] = rect_count(a, b, t);
      }
    }
  }
  // Negative sides count as empty boards.
  const BigInt& operator()(int a, int b, int t) const {
    if (a < 0 || b < 0 || t > a || t > b) return zero_;
    return values_[index(a, b, t)];
  }

 private:
  std::size_t index(int a, int b, int t) const {
    return (static_cast<std::size_t>(a) * (n_ + 1) + b) * (n_ + 1) + t;
  }
  int n_;
  std::vector<BigInt> values_;
  BigInt zero_ = 0;
};

const RectTable& rect_table(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<const RectTable>> tables;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = tables[n];
  if (!slot) slot = std::make_unique<const RectTable>(n);
  return *slot;
}

// H(i, j, m, k_win, k_loss) for one knot, m, k_win, k_loss in [0, min(i, j)].
struct Slab {
  Knot knot;
  int side = 1;  // min(i, j) + 1
  std::vector<BigInt> values;

  explicit Slab(Knot k) : knot(k), side(std::min(k.rows, k.cols) + 1) {
    values.resize(static_cast<std::size_t>(side) * side * side);
  }
  BigInt& at(int m, int kw, int kl) {
    return values[(static_cast<std::size_t>(m) * side + kw) * side + kl];
  }
  const BigInt& at(int m, int kw, int kl) const {
    return values[(static_cast<std::size_t>(m) * side + kw) * side + kl];
  }
};

}  // namespace

RookCountTable::RookCountTable(int n)
    : n_(n), counts_(static_cast<std::size_t>(n + 1) * (n + 1)) {}

BigInt RookCountTable::total() const {
  BigInt sum = 0;
  for (const auto& c : counts_) sum += c;
  return sum;
}

std::uint64_t dp_memory_budget(int n) {
  const std::uint64_t s = static_cast<std::uint64_t>(n) + 1;
  return 2ULL * static_cast<std::uint64_t>(n) * s * s * s;
}

std::uint64_t dp_operation_budget(int n) {
  const std::uint64_t k = static_cast<std::uint64_t>(n);
  return 4ULL * dp_memory_budget(n) * ((k + 3) * (k + 2) * (k + 1) / 6);
}

RookCountTable rook_counts(const ClashMatrix& m, DpStats* stats) {
  const int n = m.n();
  const RectTable& rect = rect_table(n);
  const KnotStaircase staircase = detect_knots(m);
  std::uint64_t terms = 0;

  std::vector<Slab> slabs;
  slabs.reserve(staircase.knots.size());

  // Boundary case: the leading block is uniform.
  {
    Slab& base = slabs.emplace_back(staircase.knots.front());
    const int i = base.knot.rows;
    const int j = base.knot.cols;
    for (int r = 0; r < base.side; ++r) {
      switch (staircase.base_sign) {
        case 1:
          base.at(r, r, 0) = rect(i, j, r);
          break;
        case -1:
          base.at(r, 0, r) = rect(i, j, r);
          break;
        default:
          base.at(r, 0, 0) = rect(i, j, r);
          break;
      }
    }
  }

  // Each later knot (i, j) extends its predecessor (i', j') by an L band
  // taking r1 rooks, a T band taking r2 and a W band taking r3:
  //   H(i,j,m,kw,kl) = sum H(i',j',m-rs,kw-r3,kl-r1)
  //                    * R(i-i', j'-(m-rs), r1)
  //                    * R(i-i'-r1, j-j', r2)
  //                    * R(i'-(m-rs), j-j'-r2, r3).
  // Evaluated forward: every non-zero predecessor cell is pushed into the
  // cells it contributes to.
  BigInt coef;
  BigInt term;
  for (std::size_t k = 1; k < staircase.knots.size(); ++k) {
    const Slab& prev = slabs[k - 1];
    Slab& cur = slabs.emplace_back(staircase.knots[k]);
    const int ip = prev.knot.rows;
    const int jp = prev.knot.cols;
    const int di = cur.knot.rows - ip;
    const int dj = cur.knot.cols - jp;
    for (int mp = 0; mp < prev.side; ++mp) {
      for (int r1 = 0; r1 <= di; ++r1) {
        const BigInt& c1 = rect(di, jp - mp, r1);
        if (c1.is_zero()) continue;
        for (int r2 = 0; r2 <= std::min(di - r1, dj); ++r2) {
          const BigInt& c2 = rect(di - r1, dj, r2);
          if (c2.is_zero()) continue;
          for (int r3 = 0; r3 <= std::min(ip - mp, dj - r2); ++r3) {
            const BigInt& c3 = rect(ip - mp, dj - r2, r3);
            if (c3.is_zero()) continue;
            coef = c1 * c2;
            coef *= c3;
            terms += 2;
            const int mm = mp + r1 + r2 + r3;
            for (int kw = 0; kw <= mp; ++kw) {
              for (int kl = 0; kw + kl <= mp; ++kl) {
                const BigInt& v = prev.at(mp, kw, kl);
                if (v.is_zero()) continue;
                boost::multiprecision::multiply(term, coef, v);
                cur.at(mm, kw + r3, kl + r1) += term;
                ++terms;
              }
            }
          }
        }
      }
    }
  }

  const Slab& last = slabs.back();
  if (last.knot != Knot{n, n}) throw InternalError("knot staircase does not end at (n, n)");
  RookCountTable out(n);
  for (int kw = 0; kw <= n; ++kw) {
    for (int kl = 0; kw + kl <= n; ++kl) out.at(kw, kl) = last.at(n, kw, kl);
  }
  if (stats != nullptr) {
    stats->knots = slabs.size();
    stats->table_entries = 0;
    for (const auto& s : slabs) stats->table_entries += s.values.size();
    stats->terms = terms;
  }
  return out;
}

Rational payoff_from_counts(const RookCountTable& h, AggregationKind agg) {
  const int n = h.n();
  BigInt sum = 0;
  for (int kw = 0; kw <= n; ++kw) {
    for (int kl = 0; kw + kl <= n; ++kl) {
      const BigInt& c = h.at(kw, kl);
      if (c.is_zero()) continue;
      sum += c * aggregate(agg, n, kw, kl);
    }
  }
  return Rational(sum, factorial(n));
}

Rational payoff(const SymmetricStrategy& a, const SymmetricStrategy& b, AggregationKind agg,
                DpStats* stats) {
  return payoff_from_counts(rook_counts(ClashMatrix(a, b), stats), agg);
}

}  // namespace blotto
