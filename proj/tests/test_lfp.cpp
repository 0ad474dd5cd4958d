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

#include <cmath>
#include <vector>

#include "doctest.h"
#include "tdp/correlate.hpp"
#include "tdp/error.hpp"
#include "tdp/lfp.hpp"
#include "tdp/oracle.hpp"

namespace {

using tdp::loss_increment;
using tdp::LossIncrementResult;
using tdp::TransitionMatrix;

TEST_CASE("identity correlation carries the full level") {
  const TransitionMatrix id = tdp::validate_matrix({{1.0, 0.0}, {0.0, 1.0}});
  const LossIncrementResult r = loss_increment(id, 0.5);
  CHECK(r.value == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(r.q == 1.0);
  CHECK(r.d == 0.0);
  CHECK(r.row_pair == std::pair<int, int>{0, 1});
}

TEST_CASE("uniform rows carry nothing") {
  const TransitionMatrix u = tdp::validate_matrix({{0.5, 0.5}, {0.5, 0.5}});
  const LossIncrementResult r = loss_increment(u, 3.0);
  CHECK(r.value == 0.0);
  CHECK(r.plus_set.empty());
  CHECK(r.q == 0.0);
  CHECK(r.d == 0.0);
}

TEST_CASE("asymmetric 2x2 matches the closed form") {
  const TransitionMatrix p = tdp::validate_matrix({{0.8, 0.2}, {0.0, 1.0}});
  const LossIncrementResult r = loss_increment(p, 0.1);
  // Winning pair keeps only the first column: q = 0.8, d = 0.
  const double expected = std::log(0.8 * (std::exp(0.1) - 1.0) + 1.0);
  CHECK(r.value == doctest::Approx(expected).epsilon(1e-14));
  CHECK(r.value == doctest::Approx(0.0807840338638408).epsilon(1e-12));
  CHECK(r.q == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(r.d == 0.0);
  CHECK(r.row_pair == std::pair<int, int>{0, 1});
  CHECK(r.plus_set == std::vector<int>{0});

  // Independent route: the exhaustive oracle on the same pair.
  const tdp::oracle::LfpInstance inst({0.8, 0.2}, {0.0, 1.0}, 0.1);
  CHECK(r.value == doctest::Approx(tdp::oracle::solve_pair_bruteforce(inst))
                       .epsilon(1e-12));
}

TEST_CASE("alpha edge cases") {
  const TransitionMatrix p = tdp::validate_matrix({{0.8, 0.2}, {0.0, 1.0}});
  CHECK(loss_increment(p, 0.0).value == 0.0);
  CHECK_THROWS_AS(loss_increment(p, -0.1), tdp::InvalidAlphaError);
  CHECK_THROWS_AS(loss_increment(p, std::nan("")), tdp::InvalidAlphaError);
  // Single-value domain has no row pairs and no increment.
  CHECK(loss_increment(tdp::validate_matrix({{1.0}}), 2.0).value == 0.0);
}

TEST_CASE("monotone in alpha and bounded by [0, alpha]") {
  for (int seed = 0; seed < 500; ++seed) {
    const int n = 2 + seed % 7;
    const TransitionMatrix p = tdp::random_stochastic(n, 1000 + seed);
    const double a1 = 0.05 + 0.01 * (seed % 40);
    const double a2 = a1 * (1.5 + seed % 3);
    const double v1 = loss_increment(p, a1).value;
    const double v2 = loss_increment(p, a2).value;
    CHECK(v1 >= 0.0);
    CHECK(v1 <= a1 + 1e-12);
    CHECK(v2 >= v1 - 1e-12);
    CHECK(v2 <= a2 + 1e-12);
  }
}

TEST_CASE("value is consistent with the reported (q, d)") {
  for (int seed = 0; seed < 50; ++seed) {
    const TransitionMatrix p = tdp::random_stochastic(2 + seed % 6, 2000 + seed);
    const double alpha = 0.1 + 0.3 * (seed % 10);
    const LossIncrementResult r = loss_increment(p, alpha);
    const double em1 = std::expm1(alpha);
    CHECK(r.value ==
          doctest::Approx(std::log1p(r.q * em1) - std::log1p(r.d * em1))
              .epsilon(1e-12));
    CHECK(r.q >= r.d);
  }
}

TEST_CASE("removal is final: re-filtering the winner removes nothing") {
  for (int seed = 0; seed < 100; ++seed) {
    const int n = 2 + seed % 8;
    const TransitionMatrix p = tdp::random_stochastic(n, 3000 + seed);
    const double alpha = 0.2 + 0.5 * (seed % 5);
    const LossIncrementResult r = loss_increment(p, alpha);
    if (r.plus_set.empty()) continue;
    const auto q_row = p.row(r.row_pair.first);
    const auto d_row = p.row(r.row_pair.second);
    const double em1 = std::expm1(alpha);
    const double num = r.q * em1 + 1.0;
    const double den = r.d * em1 + 1.0;
    for (int j : r.plus_set) {
      const bool keeps = d_row[j] == 0.0 || q_row[j] * den > num * d_row[j];
      CHECK(keeps);
    }
  }
}

TEST_CASE("per-pair ratio tests stay within the quadratic bound") {
  for (int seed = 0; seed < 40; ++seed) {
    const int n = 2 + seed % 9;
    const TransitionMatrix p = tdp::random_stochastic(n, 4000 + seed);
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (j == k) continue;
        const tdp::PairSolveResult r = tdp::solve_pair(p.row(j), p.row(k), 5.0);
        CHECK(r.checks <= static_cast<std::int64_t>(n) * (n - 1));
      }
    }
  }
}

TEST_CASE("matches the exhaustive oracle on random matrices") {
  const double alphas[] = {0.1, 1.0, 10.0};
  for (int seed = 0; seed < 30; ++seed) {
    const int n = 2 + seed % 11;  // up to 12
    const TransitionMatrix p = tdp::random_stochastic(n, 5000 + seed);
    const double alpha = alphas[seed % 3];
    double oracle_best = 0.0;
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (j == k) continue;
        std::vector<double> q(p.row(j).begin(), p.row(j).end());
        std::vector<double> d(p.row(k).begin(), p.row(k).end());
        const double v =
            tdp::oracle::solve_pair_bruteforce(tdp::oracle::LfpInstance(q, d, alpha));
        oracle_best = std::max(oracle_best, v);
      }
    }
    CHECK(std::fabs(loss_increment(p, alpha).value - oracle_best) <= 1e-9);
  }
}

TEST_CASE("strongest generated matrices carry the full level") {
  const auto perm = tdp::cycle_permutation(5);
  const TransitionMatrix p = tdp::strongest_matrix(5, perm);
  for (double alpha : {0.1, 1.0, 7.5}) {
    CHECK(loss_increment(p, alpha).value == doctest::Approx(alpha).epsilon(1e-14));
  }
}

}  // namespace
