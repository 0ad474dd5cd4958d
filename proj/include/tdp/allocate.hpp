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

#ifndef TDP_ALLOCATE_HPP_
#define TDP_ALLOCATE_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tdp/matrix.hpp"
#include "tdp/types.hpp"

namespace tdp {

// Pre-min budgets of a single user, kept so personalized-privacy consumers
// can use per-user budgets instead of the global min. Uniform allocation
// has first == mid == last.
struct UserBudget {
  std::string user_id;
  double eps_first = 0.0;
  double eps_mid = 0.0;
  double eps_last = 0.0;
};

struct AllocationResult {
  BudgetSchedule schedule;           // min across users
  std::vector<UserBudget> per_user;  // per-user budgets before the min
};

// Uniform budget whose worst-case leakage stays below alpha for any
// horizon: per user, split alpha into a backward share and a forward share
// whose suprema balance (bisection on the backward share), then take the
// min budget across users. Requires every present correlation to admit a
// finite supremum (StrongestCorrelationError otherwise).
AllocationResult allocate_by_upper_bound(std::span<const AdversaryModel> models,
                                         double alpha);

// (eps_1, eps_m, ..., eps_m, eps_T) schedule that makes the total leakage
// exactly alpha at every one of the T timesteps: the first and last
// releases take the backward/forward shares up front, the middle budget
// holds the accumulated leakage level. T >= 2 (HorizonTooShortError).
AllocationResult allocate_by_quantification(std::span<const AdversaryModel> models,
                                            double alpha, int T);

struct UtilityRow {
  int t = 0;
  double analytic_abs_noise = 0.0;   // expected |Laplace| = 1/eps_t
  double empirical_abs_noise = 0.0;  // mean over the requested trials
};

using UtilityReport = std::vector<UtilityRow>;

// Expected and sampled per-timestep noise magnitude for one schedule.
UtilityReport utility_report(const BudgetSchedule& schedule, int trials,
                             std::uint64_t seed);

// Side-by-side noise reports for two schedules materialized to the same
// horizon.
std::pair<UtilityReport, UtilityReport> compare_utility(
    const BudgetSchedule& a, const BudgetSchedule& b, int trials,
    std::uint64_t seed);

}  // namespace tdp

#endif  // TDP_ALLOCATE_HPP_
