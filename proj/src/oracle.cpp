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

#include "tdp/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>

#include "tdp/error.hpp"

namespace tdp::oracle {

namespace {

constexpr int kMaxBruteforceN = 20;

void check_coeffs(const std::vector<double>& v, const char* name) {
  double sum = 0.0;
  for (double c : v) {
    if (!std::isfinite(c) || c < 0.0) {
      throw ValidationError(std::string(name) + " coefficients must be nonnegative");
    }
    sum += c;
  }
  if (std::fabs(sum - 1.0) > 1e-9) {
    throw ValidationError(std::string(name) + " coefficients must sum to 1");
  }
}

}  // namespace

LfpInstance::LfpInstance(std::vector<double> q, std::vector<double> d, double a)
    : q_coeffs(std::move(q)), d_coeffs(std::move(d)), alpha(a) {
  if (q_coeffs.size() != d_coeffs.size() || q_coeffs.empty()) {
    throw ValidationError("coefficient vectors must be nonempty and equal length");
  }
  if (!std::isfinite(alpha) || alpha < 0.0) {
    throw InvalidAlphaError("alpha must be finite and nonnegative");
  }
  check_coeffs(q_coeffs, "q");
  check_coeffs(d_coeffs, "d");
}

double solve_pair_bruteforce(const LfpInstance& inst) {
  const int n = inst.n();
  if (n > kMaxBruteforceN) {
    throw TooLargeError("bruteforce oracle capped at n <= 20, got n=" +
                        std::to_string(n));
  }
  const double ea = std::exp(inst.alpha);
  // Gray-code walk over subsets: exactly one variable toggles between
  // consecutive masks, so the two dot products update in O(1).
  double qs = 0.0;  // extra numerator mass from raised variables
  double ds = 0.0;
  double best = 0.0;  // empty subset: ratio 1, value 0
  std::uint64_t gray = 0;
  const std::uint64_t total = 1ULL << n;
  for (std::uint64_t i = 1; i < total; ++i) {
    const std::uint64_t next = i ^ (i >> 1);
    const int j = std::countr_zero(gray ^ next);
    if (next & (1ULL << j)) {
      qs += inst.q_coeffs[j];
      ds += inst.d_coeffs[j];
    } else {
      qs -= inst.q_coeffs[j];
      ds -= inst.d_coeffs[j];
    }
    gray = next;
    // Raised variables contribute coeff*ea, the rest coeff*1.
    const double num = qs * (ea - 1.0) + 1.0;
    const double den = ds * (ea - 1.0) + 1.0;
    const double value = std::log(num / den);
    if (value > best) {
      best = value;
    }
  }
  return best;
}

bool verify_dinkelbach(const LfpInstance& inst,
                       std::span<const double> candidate_x, double lambda) {
  const int n = inst.n();
  if (static_cast<int>(candidate_x.size()) != n) {
    throw InfeasibleCandidateError("candidate length mismatch");
  }
  const double ea = std::exp(inst.alpha);
  double lo = candidate_x[0];
  double hi = candidate_x[0];
  for (double x : candidate_x) {
    if (!(x > 0.0) || !std::isfinite(x)) {
      throw InfeasibleCandidateError("candidate entries must be positive");
    }
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  if (hi > lo * ea * (1.0 + 1e-12)) {
    throw InfeasibleCandidateError("candidate violates the spread constraint");
  }

  if (n > kMaxBruteforceN) {
    throw TooLargeError("bruteforce oracle capped at n <= 20, got n=" +
                        std::to_string(n));
  }
  // max over the two-level family of Q(x) - lambda * D(x), scale m = 1.
  double best = -std::numeric_limits<double>::infinity();
  const std::uint64_t total = 1ULL << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    double val = 0.0;
    for (int j = 0; j < n; ++j) {
      const double x = (mask & (1ULL << j)) ? ea : 1.0;
      val += (inst.q_coeffs[j] - lambda * inst.d_coeffs[j]) * x;
    }
    if (val > best) {
      best = val;
    }
  }
  return std::fabs(best) <= 1e-9;
}

}  // namespace tdp::oracle
