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

#include "doctest.h"
#include "tdp/correlate.hpp"
#include "tdp/error.hpp"
#include "tdp/leakage.hpp"
#include "tdp/lfp.hpp"
#include "tdp/supremum.hpp"

namespace {

using tdp::epsilon_for_supremum;
using tdp::leakage_supremum;
using tdp::SupremumResult;
using tdp::TransitionMatrix;

const TransitionMatrix kIdentity = tdp::validate_matrix({{1, 0}, {0, 1}});
const TransitionMatrix kSkewed = tdp::validate_matrix({{0.8, 0.2}, {0, 1}});

// Reference limit: iterate level <- L(level) + eps. Approaches the
// supremum from below.
double recursion_limit(const TransitionMatrix& p, double eps, int steps) {
  tdp::LossCache loss(p);
  double level = eps;
  for (int i = 0; i < steps; ++i) {
    level = loss.at(level).value + eps;
  }
  return level;
}

TEST_CASE("identity correlation has no supremum") {
  const SupremumResult r = leakage_supremum(kIdentity, 0.1);
  CHECK_FALSE(r.exists);
  CHECK(r.case_id == 4);
  CHECK(r.q == 1.0);
  CHECK(r.d == 0.0);
}

TEST_CASE("uniform rows level off at the per-step budget") {
  const TransitionMatrix u = tdp::validate_matrix({{0.5, 0.5}, {0.5, 0.5}});
  const SupremumResult r = leakage_supremum(u, 1.0);
  REQUIRE(r.exists);
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(r.case_id == 2);
}

TEST_CASE("skewed 2x2 at a small budget levels off (closed form)") {
  const SupremumResult r = leakage_supremum(kSkewed, 0.1);
  REQUIRE(r.exists);
  CHECK(r.case_id == 2);
  const double expected =
      std::log((1.0 - 0.8) * std::exp(0.1) / (1.0 - 0.8 * std::exp(0.1)));
  CHECK(r.value == doctest::Approx(expected).epsilon(1e-13));
  CHECK(r.value == doctest::Approx(0.645906616057681).epsilon(1e-12));
  CHECK(std::fabs(recursion_limit(kSkewed, 0.1, 10000) - r.value) <= 1e-6);
}

TEST_CASE("skewed 2x2 at a large budget diverges") {
  // Budget above ln(1/0.8) ~ 0.2231: the level equation has no solution.
  const SupremumResult r = leakage_supremum(kSkewed, 0.3);
  CHECK_FALSE(r.exists);
  CHECK(r.case_id == 3);
}

TEST_CASE("random matrices: closed form matches the recursion limit") {
  for (int seed = 0; seed < 25; ++seed) {
    const int n = 2 + seed % 5;
    const TransitionMatrix p = tdp::random_stochastic(n, 1300 + seed);
    const double eps = 0.2 + 0.3 * (seed % 4);
    const SupremumResult r = leakage_supremum(p, eps);
    REQUIRE(r.exists);
    CHECK(r.case_id == 1);  // dense random rows keep d > 0
    const double limit = recursion_limit(p, eps, 10000);
    CHECK(limit <= r.value + 1e-9);  // approach from below
    CHECK(std::fabs(limit - r.value) <= 1e-6);
  }
}

TEST_CASE("the supremum is a fixed point of the loss recursion") {
  for (int seed = 0; seed < 15; ++seed) {
    const TransitionMatrix p = tdp::random_stochastic(3, 1400 + seed);
    const double eps = 0.5;
    const SupremumResult r = leakage_supremum(p, eps);
    REQUIRE(r.exists);
    CHECK(std::fabs(tdp::loss_increment(p, r.value).value + eps - r.value) <=
          1e-9);
  }
}

TEST_CASE("budget inversion round-trips the supremum") {
  SUBCASE("degenerate q = d keeps the budget") {
    CHECK(epsilon_for_supremum(0.4, 0.4, 2.0) == doctest::Approx(2.0));
    CHECK(epsilon_for_supremum(0.0, 0.0, 0.7) == doctest::Approx(0.7));
  }
  SUBCASE("strongest correlation admits no budget") {
    CHECK_THROWS_AS(epsilon_for_supremum(1.0, 0.0, 1.0),
                    tdp::StrongestCorrelationError);
  }
  SUBCASE("2x2 case") {
    const SupremumResult r = leakage_supremum(kSkewed, 0.1);
    REQUIRE(r.exists);
    CHECK(epsilon_for_supremum(r.q, r.d, r.value) ==
          doctest::Approx(0.1).epsilon(1e-10));
  }
  SUBCASE("random case-1 matrices") {
    for (int seed = 0; seed < 20; ++seed) {
      const TransitionMatrix p = tdp::random_stochastic(4, 1500 + seed);
      const double eps = 0.1 + 0.2 * (seed % 5);
      const SupremumResult r = leakage_supremum(p, eps);
      REQUIRE(r.exists);
      CHECK(std::fabs(epsilon_for_supremum(r.q, r.d, r.value) - eps) <= 1e-9);
    }
  }
  SUBCASE("argument validation") {
    CHECK_THROWS_AS(epsilon_for_supremum(0.5, 0.0, 0.0),
                    tdp::NonPositiveAlphaError);
    CHECK_THROWS_AS(epsilon_for_supremum(0.2, 0.5, 1.0), tdp::ValidationError);
  }
}

TEST_CASE("approaching the divergence boundary blows up monotonically") {
  // For q = 0.8, d = 0 the level diverges as the budget approaches
  // ln(1/0.8) from below.
  const double boundary = std::log(1.0 / 0.8);
  double prev = 0.0;
  for (int k = 1; k <= 6; ++k) {
    const double eps = boundary * (1.0 - std::pow(4.0, -k));
    const SupremumResult r = leakage_supremum(kSkewed, eps);
    REQUIRE(r.exists);
    CHECK(r.value > prev);
    prev = r.value;
  }
  CHECK(prev > 5.0);  // already far above any per-step budget
}

TEST_CASE("supremum input validation") {
  CHECK_THROWS_AS(leakage_supremum(kSkewed, 0.0), tdp::NonPositiveEpsilonError);
  CHECK_THROWS_AS(leakage_supremum(kSkewed, -1.0), tdp::NonPositiveEpsilonError);
}

}  // namespace
