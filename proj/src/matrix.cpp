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

#include "blotto/matrix.hpp"

#include <atomic>
#include <exception>
#include <fstream>
#include <functional>
#include <mutex>
#include <sstream>
#include <string>
#include <utility>

#include <json.hpp>

#include "blotto/brute.hpp"
#include "blotto/clash.hpp"
#include "blotto/error.hpp"
#include "blotto/parallel.hpp"

namespace blotto {

using json = nlohmann::json;

DenseMatrix PayoffMatrix::to_dense() const {
  DenseMatrix out(rows(), cols());
  for (int r = 0; r < rows(); ++r) {
    for (int c = 0; c < cols(); ++c) out(r, c) = to_double(at(r, c));
  }
  return out;
}

namespace {

PayoffMatrix allocate(const GameSpec& spec, const BuildOptions& options) {
  spec.validate();
  const auto count_a = count_symmetric_strategies(spec.d_a, spec.n);
  const auto count_b = count_symmetric_strategies(spec.d_b, spec.n);
  if (count_a > options.cap || count_b > options.cap) {
    throw SizeLimitError("matrix too large: " + std::to_string(count_a) + " x " +
                         std::to_string(count_b) + " strategies, cap " +
                         std::to_string(options.cap));
  }
  PayoffMatrix m;
  m.spec = spec;
  m.row_strategies = enumerate_symmetric_strategies(spec.d_a, spec.n);
  m.col_strategies = enumerate_symmetric_strategies(spec.d_b, spec.n);
  m.entries.assign(m.row_strategies.size() * m.col_strategies.size(), Rational(0));
  return m;
}

bool expired(const BuildOptions& options) {
  return options.deadline && std::chrono::steady_clock::now() > *options.deadline;
}

using PairPayoff = std::function<Rational(const SymmetricStrategy&, const SymmetricStrategy&,
                                          AggregationKind)>;

PayoffMatrix build_serial_with(const GameSpec& spec, const BuildOptions& options,
                               const PairPayoff& fn) {
  PayoffMatrix m = allocate(spec, options);
  for (int r = 0; r < m.rows(); ++r) {
    if (expired(options)) throw TimeoutError("matrix build exceeded its deadline");
    for (int c = 0; c < m.cols(); ++c) {
      m.entries[static_cast<std::size_t>(r) * m.cols() + c] =
          fn(m.row_strategies[static_cast<std::size_t>(r)],
             m.col_strategies[static_cast<std::size_t>(c)], spec.agg);
    }
  }
  return m;
}

}  // namespace

PayoffMatrix build_matrix(const GameSpec& spec, const BuildOptions& options) {
  PayoffMatrix m = allocate(spec, options);
  const int rows = m.rows();
  const int cols = m.cols();
  const bool skew = spec.d_a == spec.d_b;

  std::vector<std::pair<int, int>> work;
  if (skew) {
    work.reserve(static_cast<std::size_t>(rows) * (rows - 1) / 2);
    for (int r = 1; r < rows; ++r) {
      for (int c = 0; c < r; ++c) work.emplace_back(r, c);
    }
  } else {
    work.reserve(static_cast<std::size_t>(rows) * cols);
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) work.emplace_back(r, c);
    }
  }

  const int threads = options.threads > 0 ? options.threads : max_threads();
  std::atomic<bool> stop{false};
  std::exception_ptr failure;
  std::mutex failure_mu;
  const auto total = static_cast<std::ptrdiff_t>(work.size());

#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
  for (std::ptrdiff_t w = 0; w < total; ++w) {
    if (stop.load(std::memory_order_relaxed)) continue;
    try {
      if ((w & 63) == 0 && expired(options)) {
        throw TimeoutError("matrix build exceeded its deadline");
      }
      const auto [r, c] = work[static_cast<std::size_t>(w)];
      m.entries[static_cast<std::size_t>(r) * cols + c] =
          payoff(m.row_strategies[static_cast<std::size_t>(r)],
                 m.col_strategies[static_cast<std::size_t>(c)], spec.agg);
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mu);
      if (!failure) failure = std::current_exception();
      stop = true;
    }
  }
  if (failure) std::rethrow_exception(failure);

  if (skew) {
    for (int r = 0; r < rows; ++r) {
      for (int c = r + 1; c < cols; ++c) {
        m.entries[static_cast<std::size_t>(r) * cols + c] =
            -m.entries[static_cast<std::size_t>(c) * cols + r];
      }
    }
  }
  return m;
}

PayoffMatrix build_matrix_serial(const GameSpec& spec, const BuildOptions& options) {
  return build_serial_with(spec, options,
                           [](const SymmetricStrategy& a, const SymmetricStrategy& b,
                              AggregationKind agg) { return payoff(a, b, agg); });
}

PayoffMatrix build_matrix_naive(const GameSpec& spec, const BuildOptions& options) {
  return build_serial_with(spec, options, naive_payoff);
}

namespace {

json strategies_to_json(const std::vector<SymmetricStrategy>& list) {
  json out = json::array();
  for (const auto& s : list) out.push_back(std::vector<int>(s.parts().begin(), s.parts().end()));
  return out;
}

std::vector<SymmetricStrategy> strategies_from_json(const json& list, int d, int n,
                                                    const char* what) {
  std::vector<SymmetricStrategy> out;
  for (const auto& item : list) {
    out.push_back(SymmetricStrategy::from_sorted(item.get<std::vector<int>>()));
  }
  if (out != enumerate_symmetric_strategies(d, n)) {
    throw FormatError(std::string("matrix file: ") + what +
                      " do not match the enumeration for the stored game");
  }
  return out;
}

}  // namespace

void write_matrix(const PayoffMatrix& m, std::ostream& out) {
  json doc;
  doc["format_version"] = kMatrixFormatVersion;
  doc["spec"] = {{"d_a", m.spec.d_a},
                 {"d_b", m.spec.d_b},
                 {"n", m.spec.n},
                 {"agg", std::string(to_string(m.spec.agg))}};
  doc["row_strategies"] = strategies_to_json(m.row_strategies);
  doc["col_strategies"] = strategies_to_json(m.col_strategies);
  json entries = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(to_fraction_string(m.at(r, c)));
    entries.push_back(std::move(row));
  }
  doc["entries"] = std::move(entries);
  out << doc.dump(1) << '\n';
}

PayoffMatrix read_matrix(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw FormatError(std::string("matrix file is corrupt: ") + e.what());
  }
  try {
    if (!doc.is_object() || !doc.contains("format_version")) {
      throw FormatError("matrix file has no format_version");
    }
    const int version = doc.at("format_version").get<int>();
    if (version != kMatrixFormatVersion) {
      throw FormatError("matrix file version " + std::to_string(version) + ", expected " +
                        std::to_string(kMatrixFormatVersion));
    }
    PayoffMatrix m;
    const json& spec = doc.at("spec");
    m.spec.d_a = spec.at("d_a").get<int>();
    m.spec.d_b = spec.at("d_b").get<int>();
    m.spec.n = spec.at("n").get<int>();
    m.spec.agg = parse_aggregation(spec.at("agg").get<std::string>());
    m.spec.validate();
    m.row_strategies = strategies_from_json(doc.at("row_strategies"), m.spec.d_a, m.spec.n,
                                            "row strategies");
    m.col_strategies = strategies_from_json(doc.at("col_strategies"), m.spec.d_b, m.spec.n,
                                            "column strategies");
    const json& entries = doc.at("entries");
    if (!entries.is_array() || static_cast<int>(entries.size()) != m.rows()) {
      throw FormatError("matrix file: entry row count mismatch");
    }
    m.entries.reserve(static_cast<std::size_t>(m.rows()) * m.cols());
    for (const auto& row : entries) {
      if (!row.is_array() || static_cast<int>(row.size()) != m.cols()) {
        throw FormatError("matrix file: entry column count mismatch");
      }
      for (const auto& cell : row) m.entries.push_back(parse_fraction(cell.get<std::string>()));
    }
    return m;
  } catch (const FormatError&) {
    throw;
  } catch (const std::exception& e) {
    throw FormatError(std::string("matrix file is corrupt: ") + e.what());
  }
}

void save_matrix(const PayoffMatrix& m, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  write_matrix(m, out);
  if (!out) throw Error("failed writing " + path.string());
}

PayoffMatrix load_matrix(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string() + " for reading");
  return read_matrix(in);
}

PayoffMatrix load_matrix(const std::filesystem::path& path, const GameSpec& expected) {
  PayoffMatrix m = load_matrix(path);
  if (!(m.spec == expected)) {
    throw FormatError("matrix file " + path.string() + " holds a different game");
  }
  return m;
}

}  // namespace blotto
