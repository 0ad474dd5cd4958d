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

#include "tdp/supremum.hpp"

#include <cmath>
#include <utility>
#include <vector>

#include "tdp/error.hpp"
#include "tdp/lfp.hpp"

namespace tdp {

namespace {

// Closed-form supremum given a fixed maximizing (q, d). Solving
// x = e^eps * (q(x-1)+1)/(d(x-1)+1) for x = e^alpha gives a quadratic for
// d != 0 (one positive root) and a linear equation for d = 0.
SupremumResult closed_form(double q, double d, double eps) {
  if (d != 0.0) {
    const double ee = std::exp(eps);
    const double b = d + q * ee - 1.0;
    const double disc = b * b + 4.0 * d * ee * (1.0 - q);
    const double sq = std::sqrt(disc);
    // Pick the cancellation-free expression for the positive root.
    const double num = b >= 0.0 ? sq + b : 4.0 * d * ee * (1.0 - q) / (sq - b);
    return SupremumResult::finite(1, std::log(num / (2.0 * d)), q, d);
  }
  if (q == 1.0) {
    return SupremumResult::not_exist(4, q, d);
  }
  // 1 - q e^eps, written to stay exact when q e^eps is near 1.
  const double denom = q > 0.0 ? -std::expm1(eps + std::log(q)) : 1.0;
  if (denom <= 0.0) {
    return SupremumResult::not_exist(3, q, d);
  }
  return SupremumResult::finite(2, std::log1p(-q) + eps - std::log(denom), q, d);
}

}  // namespace

SupremumResult leakage_supremum(const TransitionMatrix& P, double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) {
    throw NonPositiveEpsilonError("eps must be positive and finite");
  }
  // Self-consistency loop: the maximizing (q, d) depends on the level the
  // leakage has accumulated to, which is only known once the supremum is.
  // Seed with the maximizers at eps (the first step's level) and re-derive
  // at each closed-form candidate until the selection reproduces itself.
  double alpha = eps;
  for (int round = 0; round < 100; ++round) {
    const LossIncrementResult at_alpha = loss_increment(P, alpha);
    const SupremumResult candidate = closed_form(at_alpha.q, at_alpha.d, eps);
    if (!candidate.exists) {
      return candidate;
    }
    const LossIncrementResult at_candidate = loss_increment(P, candidate.value);
    if (at_candidate.row_pair == at_alpha.row_pair &&
        at_candidate.plus_set == at_alpha.plus_set) {
      return candidate;
    }
    alpha = candidate.value;
  }
  throw StabilizationFailureError(
      "maximizing (q, d) did not stabilize within 100 rounds");
}

double epsilon_for_supremum(double q, double d, double alpha_target) {
  if (!(alpha_target > 0.0) || !std::isfinite(alpha_target)) {
    throw NonPositiveAlphaError("alpha_target must be positive and finite");
  }
  if (q < d || q < 0.0 || q > 1.0 || d < 0.0) {
    throw ValidationError("(q, d) must satisfy 0 <= d <= q <= 1");
  }
  if (q == 1.0 && d == 0.0) {
    throw StrongestCorrelationError(
        "q = 1, d = 0: leakage grows by the full budget every step; no "
        "positive budget has a finite supremum");
  }
  double increment;
  if (q == d) {
    increment = 0.0;
  } else if (alpha_target > 500.0) {
    // e^alpha overflows; use the exact large-alpha limits of the log terms.
    increment = d > 0.0 ? std::log(q / d)
                        : alpha_target + std::log(q);  // q > 0 since q > d = 0
  } else {
    const double em1 = std::expm1(alpha_target);
    increment = std::log1p(q * em1) - std::log1p(d * em1);
  }
  return alpha_target - increment;
}

}  // namespace tdp
