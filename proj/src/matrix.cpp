// Copyright 2026 The temporal-dp Authors
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

#include "tdp/matrix.hpp"

#include <cmath>
#include <cstdio>
#include <utility>

#include "tdp/error.hpp"

namespace tdp {

TransitionMatrix TransitionMatrix::validate(
    const std::vector<std::vector<double>>& raw) {
  const std::size_t n = raw.size();
  if (n == 0) {
    throw NonSquareError("matrix must have at least one row");
  }
  for (std::size_t r = 0; r < n; ++r) {
    if (raw[r].size() != n) {
      throw NonSquareError("row " + std::to_string(r) + " has " +
                           std::to_string(raw[r].size()) + " columns, expected " +
                           std::to_string(n));
    }
  }

  std::vector<double> cells;
  cells.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    double sum = 0.0;
    for (std::size_t c = 0; c < n; ++c) {
      const double p = raw[r][c];
      if (!std::isfinite(p) || p < 0.0) {
        throw NegativeEntryError("entry (" + std::to_string(r) + "," +
                                 std::to_string(c) + ") = " + std::to_string(p) +
                                 " is not a probability");
      }
      sum += p;
    }
    if (std::fabs(sum - 1.0) > kRowSumTolerance) {
      char buf[128];
      std::snprintf(buf, sizeof(buf), "row %zu sums to %.17g, expected 1", r, sum);
      throw RowSumError(static_cast<int>(r), sum, buf);
    }
    // Inside tolerance: renormalize so downstream code can rely on exact
    // unit row sums.
    for (std::size_t c = 0; c < n; ++c) {
      cells.push_back(raw[r][c] / sum);
    }
  }
  return TransitionMatrix(static_cast<int>(n), std::move(cells));
}

TransitionMatrix validate_matrix(const std::vector<std::vector<double>>& raw) {
  return TransitionMatrix::validate(raw);
}

AdversaryModel::AdversaryModel(std::string id, std::optional<TransitionMatrix> b,
                               std::optional<TransitionMatrix> f)
    : user_id(std::move(id)), backward(std::move(b)), forward(std::move(f)) {
  if (backward && forward && backward->n() != forward->n()) {
    throw ValidationError("user " + user_id + ": backward n=" +
                          std::to_string(backward->n()) + " and forward n=" +
                          std::to_string(forward->n()) + " differ");
  }
}

}  // namespace tdp
