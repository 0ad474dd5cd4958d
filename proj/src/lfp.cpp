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

#include "tdp/lfp.hpp"

#include <cmath>

#include "tdp/error.hpp"

namespace tdp {

PairSolveResult solve_pair(std::span<const double> q_row,
                           std::span<const double> d_row, double alpha) {
  PairSolveResult out;
  if (alpha == 0.0) {
    return out;  // objective is identically 1
  }
  const std::size_t n = q_row.size();
  const double em1 = std::expm1(alpha);

  // Candidates: only columns with q_j > d_j can raise the ratio above 1.
  std::vector<int> plus;
  plus.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (q_row[j] > d_row[j]) {
      plus.push_back(static_cast<int>(j));
    }
  }

  std::vector<int> keep;
  keep.reserve(plus.size());
  double q = 0.0;
  double d = 0.0;
  for (;;) {
    if (plus.empty()) {
      out.q = out.d = 0.0;
      out.value = 0.0;
      out.plus_set.clear();
      return out;
    }
    q = 0.0;
    d = 0.0;
    for (int j : plus) {
      q += q_row[j];
      d += d_row[j];
    }
    const double num = q * em1 + 1.0;
    const double den = d * em1 + 1.0;
    keep.clear();
    bool removed = false;
    for (int j : plus) {
      ++out.checks;
      // Keep iff q_j/d_j > num/den, cross-multiplied to avoid the division;
      // d_j == 0 (with q_j > 0) is an infinite ratio and always passes.
      if (d_row[j] == 0.0 || q_row[j] * den > num * d_row[j]) {
        keep.push_back(j);
      } else {
        removed = true;
      }
    }
    if (!removed) {
      out.q = q;
      out.d = d;
      out.value = std::log1p(q * em1) - std::log1p(d * em1);
      out.plus_set = plus;
      return out;
    }
    plus.swap(keep);
  }
}

LossIncrementResult loss_increment(const TransitionMatrix& P, double alpha) {
  if (!std::isfinite(alpha) || alpha < 0.0) {
    throw InvalidAlphaError("alpha must be finite and nonnegative");
  }
  LossIncrementResult best;
  if (alpha == 0.0) {
    return best;
  }
  const int n = P.n();
  bool found = false;
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      if (j == k) continue;
      PairSolveResult r = solve_pair(P.row(j), P.row(k), alpha);
      // Strict improvement only: earlier (j,k) wins ties.
      if (!found || r.value > best.value) {
        best.value = r.value;
        best.q = r.q;
        best.d = r.d;
        best.row_pair = {j, k};
        best.plus_set = std::move(r.plus_set);
        found = true;
      }
    }
  }
  if (!found) {
    best.row_pair = {0, 0};  // n == 1: no pair, no increment
  }
  return best;
}

}  // namespace tdp
