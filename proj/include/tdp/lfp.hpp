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

#ifndef TDP_LFP_HPP_
#define TDP_LFP_HPP_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "tdp/matrix.hpp"

namespace tdp {

// Result of maximizing ln(q'x / d'x) over the probability-ratio polytope
// { x > 0 : e^-alpha <= x_j/x_k <= e^alpha } for one ordered row pair.
// The maximum equals ln((q(e^a-1)+1) / (d(e^a-1)+1)) where q and d are the
// sums of the coefficient pairs kept in plus_set.
struct PairSolveResult {
  double value = 0.0;          // increment in nats, 0 <= value <= alpha
  double q = 0.0;              // sum of kept q-row coefficients
  double d = 0.0;              // sum of kept d-row coefficients
  std::vector<int> plus_set;   // kept column indices, sorted
  std::int64_t checks = 0;     // ratio tests performed (complexity guard)
};

// loss_increment over all ordered row pairs of P; the best pair and its
// selection are reported so callers can reuse (q, d) in closed forms.
struct LossIncrementResult {
  double value = 0.0;
  double q = 0.0;
  double d = 0.0;
  std::pair<int, int> row_pair{0, 0};  // (q-row, d-row); (0,0) when n == 1
  std::vector<int> plus_set;
};

// Solves one ordered pair (q_row as numerator coefficients, d_row as
// denominator coefficients) at privacy level alpha.
//
// Columns with q_j > d_j start as candidates; candidates whose ratio
// q_j/d_j does not strictly exceed the current objective are discarded,
// and the objective is recomputed until no candidate fails the test.
// Discarding never helps a previously discarded column re-qualify, so the
// loop terminates after at most n-1 removals. d_j = 0 counts as an
// infinite ratio; a tie q_j/d_j == objective discards the column, which
// leaves the optimum unchanged.
PairSolveResult solve_pair(std::span<const double> q_row,
                           std::span<const double> d_row, double alpha);

// The temporal privacy loss function: how much of the adjacent step's
// accumulated leakage alpha carries over through correlation matrix P.
// Scans all n(n-1) ordered row pairs; ties broken toward the smallest
// (q-row, d-row) index pair. alpha = 0 short-circuits to 0.
// Throws InvalidAlphaError for negative or non-finite alpha.
LossIncrementResult loss_increment(const TransitionMatrix& P, double alpha);

}  // namespace tdp

#endif  // TDP_LFP_HPP_
