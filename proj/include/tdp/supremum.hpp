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

#ifndef TDP_SUPREMUM_HPP_
#define TDP_SUPREMUM_HPP_

#include "tdp/matrix.hpp"

namespace tdp {

// Limit of the accumulated leakage over an unbounded horizon with a
// constant per-step budget. Four outcomes, decided by the (q, d) pair that
// maximizes the loss function at the limit:
//   1: d != 0                         -> finite, root of a quadratic
//   2: d = 0, q != 1, budget small    -> finite, log((1-q)e^eps/(1-q e^eps))
//   3: d = 0, q != 1, budget too big  -> diverges
//   4: d = 0, q = 1 (strongest)       -> diverges
struct SupremumResult {
  bool exists = false;
  double value = 0.0;  // meaningful only when exists
  int case_id = 0;     // 1..4
  double q = 0.0;      // maximizers at the fixed point
  double d = 0.0;

  static SupremumResult finite(int case_id, double value, double q, double d) {
    return {true, value, case_id, q, d};
  }
  static SupremumResult not_exist(int case_id, double q, double d) {
    return {false, 0.0, case_id, q, d};
  }
};

// Finds the fixed point alpha* = L(alpha*) + eps where (q, d) are
// self-consistently the maximizers of the loss function at alpha*.
// The (q, d) selection is re-derived at each candidate until it
// stabilizes (StabilizationFailureError after 100 rounds, not observed in
// practice). Throws NonPositiveEpsilonError for eps <= 0.
SupremumResult leakage_supremum(const TransitionMatrix& P, double eps);

// Inverse direction: the constant per-step budget whose supremum is
// exactly alpha_target, given the maximizing (q, d) at alpha_target:
//   eps = alpha_target - ln((q(e^a - 1) + 1) / (d(e^a - 1) + 1)).
// q = 1, d = 0 admits no positive budget (StrongestCorrelationError).
double epsilon_for_supremum(double q, double d, double alpha_target);

}  // namespace tdp

#endif  // TDP_SUPREMUM_HPP_
