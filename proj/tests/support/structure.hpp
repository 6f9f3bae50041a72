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

#ifndef BLOTTO_TESTS_SUPPORT_STRUCTURE_HPP_
#define BLOTTO_TESTS_SUPPORT_STRUCTURE_HPP_

// Direct cell-level checks of the clash-matrix staircase structure.

#include <string>
#include <utility>
#include <vector>

#include "blotto/clash.hpp"

namespace blotto::testing {

inline bool monotone(const ClashMatrix& m) {
  for (int i = 0; i < m.n(); ++i) {
    for (int j = 0; j + 1 < m.n(); ++j) {
      if (m(i, j) > m(i, j + 1)) return false;  // rows non-decreasing
      if (m(j, i) < m(j + 1, i)) return false;  // columns non-increasing
    }
  }
  return true;
}

struct Rect {
  int top, left, bottom, right;  // inclusive, zero based
};

// 4-connected components of T cells. Each must fill its bounding box; then
// distinct components cannot share a side (they would be connected).
inline bool tie_components_are_rectangles(const ClashMatrix& m, std::vector<Rect>* rects = nullptr) {
  const int n = m.n();
  std::vector<int> label(static_cast<std::size_t>(n * n), -1);
  int next = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (m(i, j) != 0 || label[static_cast<std::size_t>(i * n + j)] >= 0) continue;
      Rect box{i, j, i, j};
      int cells = 0;
      std::vector<std::pair<int, int>> stack{{i, j}};
      label[static_cast<std::size_t>(i * n + j)] = next;
      while (!stack.empty()) {
        auto [r, c] = stack.back();
        stack.pop_back();
        ++cells;
        box.top = std::min(box.top, r);
        box.bottom = std::max(box.bottom, r);
        box.left = std::min(box.left, c);
        box.right = std::max(box.right, c);
        const int dr[] = {1, -1, 0, 0};
        const int dc[] = {0, 0, 1, -1};
        for (int k = 0; k < 4; ++k) {
          const int rr = r + dr[k];
          const int cc = c + dc[k];
          if (rr < 0 || cc < 0 || rr >= n || cc >= n) continue;
          auto& l = label[static_cast<std::size_t>(rr * n + cc)];
          if (m(rr, cc) == 0 && l < 0) {
            l = next;
            stack.emplace_back(rr, cc);
          }
        }
      }
      if (cells != (box.bottom - box.top + 1) * (box.right - box.left + 1)) return false;
      if (rects != nullptr) rects->push_back(box);
      ++next;
    }
  }
  return true;
}

// Every cell of the 1-based block rows [r0, r1] x cols [c0, c1] equals v.
inline bool block_is(const ClashMatrix& m, int r0, int r1, int c0, int c1, int v) {
  for (int r = r0; r <= r1; ++r) {
    for (int c = c0; c <= c1; ++c) {
      if (m(r - 1, c - 1) != v) return false;
    }
  }
  return true;
}

// Knot staircase well-formedness plus band containment for every cut.
inline std::string knot_violation(const ClashMatrix& m, const KnotStaircase& st) {
  const int n = m.n();
  if (st.knots.empty() || st.knots.back() != Knot{n, n}) return "does not end at (n, n)";
  if (st.knots.size() > static_cast<std::size_t>(2 * n)) return "more than 2n knots";
  const Knot base = st.knots.front();
  if (!m.uniform_block(base.rows, base.cols)) return "leading block not uniform";
  if (base.rows > 0 && base.cols > 0 && m(0, 0) != st.base_sign) return "base sign wrong";
  for (std::size_t k = 1; k < st.knots.size(); ++k) {
    const Knot p = st.knots[k - 1];
    const Knot q = st.knots[k];
    if (p.rows > q.rows || p.cols > q.cols || p == q) return "knots not ascending";
    if (!block_is(m, p.rows + 1, q.rows, 1, p.cols, -1)) return "L band leaves area L";
    if (!block_is(m, 1, p.rows, p.cols + 1, q.cols, 1)) return "W band leaves area W";
    if (!block_is(m, p.rows + 1, q.rows, p.cols + 1, q.cols, 0)) return "T band leaves area T";
  }
  return {};
}

}  // namespace blotto::testing

#endif  // BLOTTO_TESTS_SUPPORT_STRUCTURE_HPP_
