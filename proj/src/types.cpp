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

#include "tdp/types.hpp"

#include <cmath>
#include <utility>

#include "tdp/error.hpp"

namespace tdp {

namespace {

// Absolute-plus-relative slack for the accounting identities. Producers
// compute the identities directly, so only accumulated rounding error over
// long horizons has to be absorbed.
bool close(double a, double b) {
  const double tol = 1e-9 + 1e-12 * std::max(std::fabs(a), std::fabs(b));
  return std::fabs(a - b) <= tol;
}

}  // namespace

LeakageTrace::LeakageTrace(std::string user_id, std::vector<LeakageEntry> entries)
    : user_id_(std::move(user_id)), entries_(std::move(entries)) {
  const int T = static_cast<int>(entries_.size());
  if (T == 0) {
    throw EmptyScheduleError("leakage trace must cover at least one timestep");
  }
  double prefix = 0.0;
  for (int i = 0; i < T; ++i) {
    const LeakageEntry& e = entries_[i];
    if (e.t != i + 1) {
      throw ValidationError("trace timesteps must be 1..T in order");
    }
    if (!(e.epsilon > 0.0) || !std::isfinite(e.epsilon)) {
      throw NonPositiveEpsilonError("epsilon at t=" + std::to_string(e.t) +
                                    " must be positive and finite");
    }
    if (!close(e.tpl, e.bpl + e.fpl - e.epsilon)) {
      throw ValidationError("tpl != bpl + fpl - epsilon at t=" +
                            std::to_string(e.t));
    }
    prefix += e.epsilon;
    if (e.bpl < e.epsilon - 1e-9 || e.bpl > prefix + 1e-9 + 1e-12 * prefix) {
      throw ValidationError("bpl out of [epsilon, prefix-sum] bounds at t=" +
                            std::to_string(e.t));
    }
  }
  double suffix = 0.0;
  for (int i = T - 1; i >= 0; --i) {
    const LeakageEntry& e = entries_[i];
    suffix += e.epsilon;
    if (e.fpl < e.epsilon - 1e-9 || e.fpl > suffix + 1e-9 + 1e-12 * suffix) {
      throw ValidationError("fpl out of [epsilon, suffix-sum] bounds at t=" +
                            std::to_string(e.t));
    }
  }
  if (!close(entries_.front().bpl, entries_.front().epsilon)) {
    throw ValidationError("bpl at t=1 must equal epsilon");
  }
  if (!close(entries_.back().fpl, entries_.back().epsilon)) {
    throw ValidationError("fpl at t=T must equal epsilon");
  }
}

const LeakageEntry& LeakageTrace::at(int t) const {
  if (t < 1 || t > horizon()) {
    throw IndexOutOfRangeError("timestep " + std::to_string(t) +
                               " outside [1," + std::to_string(horizon()) + "]");
  }
  return entries_[static_cast<std::size_t>(t) - 1];
}

namespace {

void require_positive(double eps, const char* which) {
  if (!(eps > 0.0) || !std::isfinite(eps)) {
    throw NonPositiveEpsilonError(std::string(which) +
                                  " budget must be positive and finite");
  }
}

}  // namespace

BudgetSchedule BudgetSchedule::uniform(double eps) {
  require_positive(eps, "uniform");
  BudgetSchedule s;
  s.eps_first_ = s.eps_mid_ = s.eps_last_ = eps;
  return s;
}

BudgetSchedule BudgetSchedule::uniform(double eps, int T) {
  require_positive(eps, "uniform");
  if (T < 1) {
    throw HorizonTooShortError("horizon must be >= 1");
  }
  BudgetSchedule s;
  s.horizon_ = T;
  s.eps_first_ = s.eps_mid_ = s.eps_last_ = eps;
  s.per_step_.assign(static_cast<std::size_t>(T), eps);
  return s;
}

BudgetSchedule BudgetSchedule::endpoint_weighted(double first, double mid,
                                                 double last, int T) {
  require_positive(first, "first");
  require_positive(mid, "mid");
  require_positive(last, "last");
  if (T < 2) {
    throw HorizonTooShortError("endpoint-weighted schedule needs T >= 2");
  }
  if (first < mid || last < mid) {
    throw ValidationError("endpoint budgets must not be below the middle budget");
  }
  BudgetSchedule s;
  s.horizon_ = T;
  s.eps_first_ = first;
  s.eps_mid_ = mid;
  s.eps_last_ = last;
  s.per_step_.assign(static_cast<std::size_t>(T), mid);
  s.per_step_.front() = first;
  s.per_step_.back() = last;
  return s;
}

BudgetSchedule BudgetSchedule::from_steps(std::vector<double> steps) {
  if (steps.empty()) {
    throw EmptyScheduleError("schedule must contain at least one budget");
  }
  for (double e : steps) require_positive(e, "per-step");
  BudgetSchedule s;
  s.horizon_ = static_cast<int>(steps.size());
  s.eps_first_ = steps.front();
  s.eps_last_ = steps.back();
  s.eps_mid_ = steps.size() > 2 ? steps[1] : steps.front();
  s.per_step_ = std::move(steps);
  return s;
}

std::vector<double> BudgetSchedule::materialize(int T) const {
  if (T < 1) {
    throw HorizonTooShortError("horizon must be >= 1");
  }
  if (unbounded()) {
    return std::vector<double>(static_cast<std::size_t>(T), eps_mid_);
  }
  if (T > horizon()) {
    throw ScheduleTooShortError("schedule covers " + std::to_string(horizon()) +
                                " steps, " + std::to_string(T) + " requested");
  }
  return std::vector<double>(per_step_.begin(), per_step_.begin() + T);
}

}  // namespace tdp
