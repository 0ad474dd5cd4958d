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

#include "tdp/allocate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tdp/error.hpp"
#include "tdp/lfp.hpp"
#include "tdp/rng.hpp"
#include "tdp/supremum.hpp"

namespace tdp {

namespace {

constexpr int kBisectionCap = 200;
constexpr double kBalanceTolerance = 1e-9;

// The budget whose accumulated leakage through P levels off exactly at
// alpha: alpha minus the loss increment at alpha, with (q, d) taken from
// the maximizers at alpha. Absent correlation consumes the level directly.
double share_for(const std::optional<TransitionMatrix>& P, double alpha) {
  if (!P) {
    return alpha;
  }
  const LossIncrementResult r = loss_increment(*P, alpha);
  const double eps = epsilon_for_supremum(r.q, r.d, alpha);
  if (!(eps > 0.0) || !std::isfinite(eps)) {
    throw StrongestCorrelationError(
        "no positive budget keeps the leakage through this correlation at " +
        std::to_string(alpha));
  }
  return eps;
}

struct BalancePoint {
  double alpha_b = 0.0;  // backward share of alpha
  double alpha_f = 0.0;  // forward share, alpha - alpha_b + eps_b
  double eps_b = 0.0;
  double eps_f = 0.0;
};

BalancePoint eval_split(const AdversaryModel& m, double alpha, double alpha_b) {
  BalancePoint p;
  p.alpha_b = alpha_b;
  p.eps_b = share_for(m.backward, alpha_b);
  // The two shares overlap in the per-release budget, which both sides
  // count once: total = alpha_b + alpha_f - eps.
  p.alpha_f = alpha - alpha_b + p.eps_b;
  p.eps_f = share_for(m.forward, p.alpha_f);
  return p;
}

// Splits alpha between the backward and forward directions so both sides
// support the same per-step budget. The imbalance eps_b - eps_f is
// negative at alpha_b -> 0 and nonnegative at alpha_b = alpha; bisect.
BalancePoint balance_shares(const AdversaryModel& m, double alpha) {
  // Degenerate splits solve directly: a missing direction pins its share.
  if (!m.backward && !m.forward) {
    return {alpha, alpha, alpha, alpha};
  }
  if (!m.forward) {
    BalancePoint p = eval_split(m, alpha, alpha);  // alpha_f = eps_b = eps_f
    return p;
  }
  if (!m.backward) {
    // eps_b must meet eps_f and alpha_b = eps_b; then alpha_f = alpha.
    const double eps = share_for(m.forward, alpha);
    return {eps, alpha, eps, eps};
  }

  double lo = alpha * 1e-6;
  double hi = alpha;
  BalancePoint at_lo = eval_split(m, alpha, lo);
  BalancePoint at_hi = eval_split(m, alpha, hi);
  if (std::fabs(at_lo.eps_b - at_lo.eps_f) <= 1e-12) {
    return at_lo;
  }
  if (std::fabs(at_hi.eps_b - at_hi.eps_f) <= 1e-12) {
    return at_hi;
  }
  if (at_lo.eps_b - at_lo.eps_f > 0.0 || at_hi.eps_b - at_hi.eps_f < 0.0) {
    throw BracketError("share imbalance does not change sign on (0, alpha]");
  }
  BalancePoint best = at_hi;
  for (int i = 0; i < kBisectionCap; ++i) {
    const double mid = 0.5 * (lo + hi);
    best = eval_split(m, alpha, mid);
    const double f = best.eps_b - best.eps_f;
    if (std::fabs(f) <= 1e-12) {
      return best;
    }
    if (f < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  if (std::fabs(best.eps_b - best.eps_f) > kBalanceTolerance) {
    throw BracketError("bisection did not reach the balance tolerance");
  }
  return best;
}

void check_users(std::span<const AdversaryModel> models, double alpha) {
  if (models.empty()) {
    throw EmptyUserSetError("at least one adversary model is required");
  }
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw NonPositiveAlphaError("alpha must be positive and finite");
  }
}

}  // namespace

AllocationResult allocate_by_upper_bound(std::span<const AdversaryModel> models,
                                         double alpha) {
  check_users(models, alpha);
  AllocationResult out{BudgetSchedule::uniform(alpha), {}};
  double eps = std::numeric_limits<double>::infinity();
  for (const AdversaryModel& m : models) {
    const BalancePoint p = balance_shares(m, alpha);
    out.per_user.push_back({m.user_id, p.eps_b, p.eps_b, p.eps_b});
    eps = std::min(eps, p.eps_b);
  }
  out.schedule = BudgetSchedule::uniform(eps);
  return out;
}

AllocationResult allocate_by_quantification(
    std::span<const AdversaryModel> models, double alpha, int T) {
  check_users(models, alpha);
  if (T < 2) {
    throw HorizonTooShortError("quantification schedule needs T >= 2");
  }
  AllocationResult out{BudgetSchedule::uniform(alpha), {}};
  double e1 = std::numeric_limits<double>::infinity();
  double em = e1;
  double eT = e1;
  for (const AdversaryModel& m : models) {
    // The balance point doubles as the endpoint allocation: the first
    // release takes the full backward share alpha_b, the middle budget is
    // the level-holding eps, and the last release takes alpha_f.
    const BalancePoint p = balance_shares(m, alpha);
    out.per_user.push_back({m.user_id, p.alpha_b, p.eps_b, p.alpha_f});
    e1 = std::min(e1, p.alpha_b);
    em = std::min(em, p.eps_b);
    eT = std::min(eT, p.alpha_f);
  }
  out.schedule = BudgetSchedule::endpoint_weighted(e1, em, eT, T);
  return out;
}

UtilityReport utility_report(const BudgetSchedule& schedule, int trials,
                             std::uint64_t seed) {
  if (schedule.unbounded()) {
    throw ValidationError("utility report requires a materialized schedule");
  }
  if (trials < 1) {
    throw ValidationError("trials must be >= 1");
  }
  UtilityReport report;
  report.reserve(schedule.per_step().size());
  for (std::size_t i = 0; i < schedule.per_step().size(); ++i) {
    const double eps = schedule.per_step()[i];
    const double scale = 1.0 / eps;
    SplitMix64 rng = SplitMix64::substream(seed, i + 1);
    double acc = 0.0;
    for (int k = 0; k < trials; ++k) {
      acc += std::fabs(rng.next_laplace(scale));
    }
    report.push_back({static_cast<int>(i) + 1, scale, acc / trials});
  }
  return report;
}

std::pair<UtilityReport, UtilityReport> compare_utility(
    const BudgetSchedule& a, const BudgetSchedule& b, int trials,
    std::uint64_t seed) {
  if (a.unbounded() || b.unbounded() || a.horizon() != b.horizon()) {
    throw ValidationError("schedules must be materialized to the same horizon");
  }
  return {utility_report(a, trials, seed), utility_report(b, trials, mix64(seed))};
}

}  // namespace tdp
