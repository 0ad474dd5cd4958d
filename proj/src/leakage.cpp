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

#include "tdp/leakage.hpp"

#include <algorithm>
#include <cmath>

#include "tdp/error.hpp"

namespace tdp {

namespace {

void check_eps(std::span<const double> eps) {
  if (eps.empty()) {
    throw EmptyScheduleError("budget sequence must not be empty");
  }
  for (double e : eps) {
    if (!(e > 0.0) || !std::isfinite(e)) {
      throw NonPositiveEpsilonError("per-step budgets must be positive and finite");
    }
  }
}

}  // namespace

const LossIncrementResult& LossCache::at(double alpha) {
  // Keys outside the representable range bypass the cache.
  const double scaled = alpha * 1e12;
  if (!(std::fabs(scaled) < 9e18)) {
    static thread_local LossIncrementResult uncached;
    uncached = loss_increment(*matrix_, alpha);
    return uncached;
  }
  const std::int64_t key = std::llround(scaled);
  auto it = memo_.find(key);
  if (it == memo_.end()) {
    it = memo_.emplace(key, loss_increment(*matrix_, alpha)).first;
  }
  return it->second;
}

std::vector<double> bpl_trace(const std::optional<TransitionMatrix>& backward,
                              std::span<const double> eps) {
  check_eps(eps);
  std::vector<double> out(eps.begin(), eps.end());
  if (!backward) {
    return out;
  }
  LossCache loss(*backward);
  for (std::size_t t = 1; t < out.size(); ++t) {
    out[t] = loss.at(out[t - 1]).value + eps[t];
  }
  return out;
}

std::vector<double> fpl_trace(const std::optional<TransitionMatrix>& forward,
                              std::span<const double> eps) {
  check_eps(eps);
  std::vector<double> out(eps.begin(), eps.end());
  if (!forward) {
    return out;
  }
  LossCache loss(*forward);
  for (std::size_t t = out.size() - 1; t-- > 0;) {
    out[t] = loss.at(out[t + 1]).value + eps[t];
  }
  return out;
}

LeakageTrace tpl_trace(const AdversaryModel& model, std::span<const double> eps) {
  const std::vector<double> bpl = bpl_trace(model.backward, eps);
  const std::vector<double> fpl = fpl_trace(model.forward, eps);
  std::vector<LeakageEntry> entries(eps.size());
  for (std::size_t i = 0; i < eps.size(); ++i) {
    entries[i] = {static_cast<int>(i) + 1, eps[i], bpl[i], fpl[i],
                  bpl[i] + fpl[i] - eps[i]};
  }
  return LeakageTrace(model.user_id, std::move(entries));
}

MaxLeakage max_tpl_over_users(std::span<const AdversaryModel> models,
                              std::span<const double> eps) {
  if (models.empty()) {
    throw EmptyUserSetError("at least one adversary model is required");
  }
  std::vector<LeakageTrace> traces;
  traces.reserve(models.size());
  for (const AdversaryModel& m : models) {
    traces.push_back(tpl_trace(m, eps));
  }
  std::vector<LeakageEntry> entries(eps.size());
  std::vector<std::string> argmax(eps.size());
  for (std::size_t i = 0; i < eps.size(); ++i) {
    std::size_t best = 0;
    for (std::size_t u = 1; u < traces.size(); ++u) {
      if (traces[u].entries()[i].tpl > traces[best].entries()[i].tpl) {
        best = u;
      }
    }
    entries[i] = traces[best].entries()[i];
    argmax[i] = models[best].user_id;
  }
  return MaxLeakage{LeakageTrace("max", std::move(entries)), std::move(argmax)};
}

double sequence_tpl(const LeakageTrace& trace, int t, int j) {
  const int T = trace.horizon();
  if (j < 0 || t < 1 || t + j > T) {
    throw IndexOutOfRangeError("window [" + std::to_string(t) + "," +
                               std::to_string(t + j) + "] outside [1," +
                               std::to_string(T) + "]");
  }
  if (j == 0) {
    return trace.at(t).tpl;
  }
  double middle = 0.0;
  for (int k = 1; k < j; ++k) {
    middle += trace.at(t + k).epsilon;
  }
  return trace.at(t).bpl + trace.at(t + j).fpl + middle;
}

}  // namespace tdp
