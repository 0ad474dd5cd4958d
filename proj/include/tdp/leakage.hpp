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

#ifndef TDP_LEAKAGE_HPP_
#define TDP_LEAKAGE_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "tdp/lfp.hpp"
#include "tdp/matrix.hpp"
#include "tdp/types.hpp"

namespace tdp {

// Memoizing wrapper around loss_increment for one matrix. The cache key is
// alpha rounded to 12 decimals; rounding affects only cache identity, the
// stored results are computed from the exact alpha that first produced
// them.
class LossCache {
 public:
  explicit LossCache(const TransitionMatrix& matrix) : matrix_(&matrix) {}

  const LossIncrementResult& at(double alpha);

 private:
  const TransitionMatrix* matrix_;
  std::unordered_map<std::int64_t, LossIncrementResult> memo_;
};

// Backward leakage: bpl_1 = eps_1, bpl_t = L(bpl_{t-1}) + eps_t. An absent
// matrix means no backward correlation, so the floor bpl_t = eps_t.
std::vector<double> bpl_trace(const std::optional<TransitionMatrix>& backward,
                              std::span<const double> eps);

// Forward leakage mirrors bpl_trace with time reversed: fpl_T = eps_T,
// fpl_t = L(fpl_{t+1}) + eps_t. Covers the releases seen so far; extending
// the horizon requires recomputing (every earlier step can grow).
std::vector<double> fpl_trace(const std::optional<TransitionMatrix>& forward,
                              std::span<const double> eps);

// Full per-timestep accounting for one user: tpl = bpl + fpl - eps.
LeakageTrace tpl_trace(const AdversaryModel& model, std::span<const double> eps);

struct MaxLeakage {
  LeakageTrace trace;                   // rows of the worst user per timestep
  std::vector<std::string> argmax_user; // who attains the max at each t
};

// Worst-case trace across users: at each timestep the entry of the user
// with the largest total leakage (ties to the earliest user).
MaxLeakage max_tpl_over_users(std::span<const AdversaryModel> models,
                              std::span<const double> eps);

// Leakage of the combined releases t..t+j against the same adversary:
//   j = 0: the event-level value tpl_t
//   j = 1: bpl_t + fpl_{t+1}
//   j >= 2: bpl_t + fpl_{t+j} + sum of the budgets strictly between.
// For t = 1, j = T-1 this telescopes to the plain budget sum: correlations
// do not change user-level privacy.
double sequence_tpl(const LeakageTrace& trace, int t, int j);

}  // namespace tdp

#endif  // TDP_LEAKAGE_HPP_
