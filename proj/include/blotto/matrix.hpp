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

#ifndef BLOTTO_MATRIX_HPP_
#define BLOTTO_MATRIX_HPP_

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

#include "blotto/dense_matrix.hpp"
#include "blotto/game.hpp"
#include "blotto/numeric.hpp"

namespace blotto {

inline constexpr int kMatrixFormatVersion = 1;
inline constexpr std::size_t kDefaultStrategyCap = 50'000;

// Payoffs to player A over the symmetric strategies of both players, in
// enumeration order.
struct PayoffMatrix {
  GameSpec spec;
  std::vector<SymmetricStrategy> row_strategies;
  std::vector<SymmetricStrategy> col_strategies;
  std::vector<Rational> entries;  // row major

  int rows() const { return static_cast<int>(row_strategies.size()); }
  int cols() const { return static_cast<int>(col_strategies.size()); }
  const Rational& at(int r, int c) const {
    return entries[static_cast<std::size_t>(r) * cols() + c];
  }
  DenseMatrix to_dense() const;

  friend bool operator==(const PayoffMatrix&, const PayoffMatrix&) = default;
};

struct BuildOptions {
  // Per-player strategy-count cap.
  std::size_t cap = kDefaultStrategyCap;
  // 0 keeps the OpenMP default.
  int threads = 0;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

// Every entry comes from the clash-matrix payoff. Entries are computed in
// parallel; when d_a == d_b only the lower triangle is evaluated and the rest
// is filled by negation. Throws SizeLimitError past the cap and TimeoutError
// past the deadline.
PayoffMatrix build_matrix(const GameSpec& spec, const BuildOptions& options = {});

// Single-threaded reference with no triangle shortcut.
PayoffMatrix build_matrix_serial(const GameSpec& spec, const BuildOptions& options = {});

// Same layout with entries from the permutation-enumeration payoff.
PayoffMatrix build_matrix_naive(const GameSpec& spec, const BuildOptions& options = {});

void write_matrix(const PayoffMatrix& m, std::ostream& out);
PayoffMatrix read_matrix(std::istream& in);

void save_matrix(const PayoffMatrix& m, const std::filesystem::path& path);
PayoffMatrix load_matrix(const std::filesystem::path& path);
// Also throws FormatError when the stored game differs from `expected`.
PayoffMatrix load_matrix(const std::filesystem::path& path, const GameSpec& expected);

}  // namespace blotto

#endif  // BLOTTO_MATRIX_HPP_
