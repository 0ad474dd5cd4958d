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

#ifndef TDP_ORACLE_HPP_
#define TDP_ORACLE_HPP_

#include <span>
#include <vector>

namespace tdp::oracle {

// One ratio-maximization instance: a numerator/denominator coefficient pair
// (two rows of a transition matrix) and the privacy level bounding the
// variable spread.
struct LfpInstance {
  std::vector<double> q_coeffs;
  std::vector<double> d_coeffs;
  double alpha;

  // Validates nonnegativity and unit sums.
  LfpInstance(std::vector<double> q, std::vector<double> d, double a);

  int n() const { return static_cast<int>(q_coeffs.size()); }
};

// Exhaustive reference solver. An optimum always has every variable at one
// of two levels (e^alpha * m or m), so enumerating all 2^n two-level
// assignments covers every candidate optimum; m cancels in the ratio.
// Exponential by design; guarded to n <= 20 (TooLargeError).
double solve_pair_bruteforce(const LfpInstance& inst);

// Optimality certificate: candidate_x (up to scale) is optimal with value
// ln(lambda) iff max over the two-level family of Q(x) - lambda * D(x) is
// zero. Returns that check within 1e-9. candidate_x must respect the
// spread constraints (InfeasibleCandidateError otherwise).
bool verify_dinkelbach(const LfpInstance& inst,
                       std::span<const double> candidate_x, double lambda);

}  // namespace tdp::oracle

#endif  // TDP_ORACLE_HPP_
