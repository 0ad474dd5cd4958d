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

#ifndef TDP_TYPES_HPP_
#define TDP_TYPES_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tdp {

// One timestep of a leakage trace. All values are in nats. epsilon is the
// per-release privacy loss of the mechanism alone; bpl/fpl add what the
// adversary gains from past/future releases through the known correlations.
struct LeakageEntry {
  int t = 0;  // 1-based
  double epsilon = 0.0;
  double bpl = 0.0;
  double fpl = 0.0;
  double tpl = 0.0;
};

// Per-timestep leakage of one release sequence. The constructor enforces
// the accounting identities that every producer must satisfy:
//   tpl = bpl + fpl - epsilon        (the per-release loss is counted twice)
//   bpl_1 = epsilon_1, fpl_T = epsilon_T
//   epsilon_t <= bpl_t <= sum of epsilons up to t (and mirrored for fpl)
class LeakageTrace {
 public:
  LeakageTrace(std::string user_id, std::vector<LeakageEntry> entries);

  const std::string& user_id() const { return user_id_; }
  int horizon() const { return static_cast<int>(entries_.size()); }
  const std::vector<LeakageEntry>& entries() const { return entries_; }
  const LeakageEntry& at(int t) const;  // 1-based

 private:
  std::string user_id_;
  std::vector<LeakageEntry> entries_;
};

// Per-timestep privacy budgets produced by the allocation algorithms.
// The horizon may be unbounded (uniform budget valid for any length).
class BudgetSchedule {
 public:
  // Constant budget for an unbounded horizon.
  static BudgetSchedule uniform(double eps);
  // Constant budget materialized for T steps.
  static BudgetSchedule uniform(double eps, int T);
  // (first, mid, ..., mid, last) for T >= 2 steps; first and last must not
  // be below mid.
  static BudgetSchedule endpoint_weighted(double first, double mid, double last,
                                          int T);
  // Arbitrary positive budgets loaded from a file; no shape constraints.
  static BudgetSchedule from_steps(std::vector<double> steps);

  bool unbounded() const { return !horizon_.has_value(); }
  // Only valid for bounded schedules.
  int horizon() const { return *horizon_; }
  double eps_first() const { return eps_first_; }
  double eps_mid() const { return eps_mid_; }
  double eps_last() const { return eps_last_; }
  // Empty for unbounded schedules.
  const std::vector<double>& per_step() const { return per_step_; }

  // Budgets for the first T steps; uniform-extends an unbounded schedule.
  std::vector<double> materialize(int T) const;

 private:
  BudgetSchedule() = default;

  std::optional<int> horizon_;
  double eps_first_ = 0.0;
  double eps_mid_ = 0.0;
  double eps_last_ = 0.0;
  std::vector<double> per_step_;
};

// One timestep of the released histogram: true per-value counts and, once
// released, their Laplace-noised counterparts.
struct ReleaseSnapshot {
  int t = 0;
  std::vector<std::int64_t> true_counts;
  std::vector<double> noisy_counts;  // empty until released
  double epsilon_used = 0.0;         // 0 until released
};

}  // namespace tdp

#endif  // TDP_TYPES_HPP_
