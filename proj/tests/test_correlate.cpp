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
#include "tdp/leakage.hpp"

namespace {

using tdp::cycle_permutation;
using tdp::random_stochastic;
using tdp::smooth;
using tdp::strongest_matrix;
using tdp::TransitionMatrix;

TEST_CASE("strongest matrix places unit mass along the permutation") {
  const std::vector<int> id_perm{0, 1};
  const TransitionMatrix id = strongest_matrix(2, id_perm);
  CHECK(id.at(0, 0) == 1.0);
  CHECK(id.at(1, 1) == 1.0);

  const std::vector<int> cycle{1, 2, 0};
  const TransitionMatrix c = strongest_matrix(3, cycle);
  CHECK(c.at(0, 1) == 1.0);
  CHECK(c.at(1, 2) == 1.0);
  CHECK(c.at(2, 0) == 1.0);

  const std::vector<int> bad{0, 0};
  CHECK_THROWS_AS(strongest_matrix(2, bad), tdp::InvalidPermutationError);
  CHECK_THROWS_AS(strongest_matrix(3, id_perm), tdp::InvalidPermutationError);
}

TEST_CASE("cycle permutation is a single n-cycle") {
  const auto perm = cycle_permutation(4);
  CHECK(perm == std::vector<int>{1, 2, 3, 0});
  CHECK(cycle_permutation(1) == std::vector<int>{0});
}

TEST_CASE("smoothing the identity by s=1") {
  const TransitionMatrix id = strongest_matrix(2, std::vector<int>{0, 1});
  const TransitionMatrix s = smooth(id, 1.0);
  CHECK(s.at(0, 0) == doctest::Approx(2.0 / 3).epsilon(1e-15));
  CHECK(s.at(0, 1) == doctest::Approx(1.0 / 3).epsilon(1e-15));
  CHECK(s.at(1, 0) == doctest::Approx(1.0 / 3).epsilon(1e-15));
  CHECK(s.at(1, 1) == doctest::Approx(2.0 / 3).epsilon(1e-15));
}

TEST_CASE("huge smoothing approaches the uniform matrix") {
  const TransitionMatrix p = random_stochastic(6, 17);
  const TransitionMatrix s = smooth(p, 1e6);
  for (int j = 0; j < 6; ++j) {
    for (int k = 0; k < 6; ++k) {
      CHECK(std::fabs(s.at(j, k) - 1.0 / 6) <= 1e-6);
    }
  }
}

TEST_CASE("smoothing validates its parameter and keeps rows stochastic") {
  const TransitionMatrix p = random_stochastic(4, 3);
  CHECK_THROWS_AS(smooth(p, 0.0), tdp::NonPositiveSmoothingError);
  CHECK_THROWS_AS(smooth(p, -2.0), tdp::NonPositiveSmoothingError);
  for (double s : {1e-4, 0.1, 3.0}) {
    const TransitionMatrix m = smooth(p, s);
    for (int j = 0; j < 4; ++j) {
      double sum = 0.0;
      for (int k = 0; k < 4; ++k) sum += m.at(j, k);
      CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("more smoothing moves every row closer to uniform") {
  const TransitionMatrix base =
      strongest_matrix(5, cycle_permutation(5));
  const double svals[] = {0.01, 0.1, 1.0, 10.0};
  double prev_tv = 2.0;
  for (double s : svals) {
    const TransitionMatrix m = smooth(base, s);
    double tv = 0.0;  // max over rows of total-variation distance to uniform
    for (int j = 0; j < 5; ++j) {
      double row_tv = 0.0;
      for (int k = 0; k < 5; ++k) row_tv += std::fabs(m.at(j, k) - 0.2);
      tv = std::max(tv, 0.5 * row_tv);
    }
    CHECK(tv <= prev_tv + 1e-12);
    prev_tv = tv;
  }
}

TEST_CASE("stronger correlation leaks more at every timestep") {
  const TransitionMatrix base = strongest_matrix(8, cycle_permutation(8));
  const std::vector<double> eps(30, 0.5);
  std::vector<double> prev;
  for (double s : {0.005, 0.05, 0.5}) {
    const auto trace = tdp::bpl_trace(smooth(base, s), eps);
    if (!prev.empty()) {
      for (std::size_t t = 0; t < eps.size(); ++t) {
        CHECK(prev[t] >= trace[t] - 1e-12);
      }
    }
    prev = trace;
  }
}

TEST_CASE("random stochastic generation is seeded and valid") {
  const TransitionMatrix a = random_stochastic(12, 42);
  const TransitionMatrix b = random_stochastic(12, 42);
  CHECK(a == b);
  const TransitionMatrix c = random_stochastic(12, 43);
  CHECK(a != c);
  CHECK(random_stochastic(1, 7).at(0, 0) == 1.0);

  bool all_valid = true;
  for (int seed = 0; seed < 1000 && all_valid; ++seed) {
    const TransitionMatrix m = random_stochastic(12, seed);
    for (int j = 0; j < 12; ++j) {
      double sum = 0.0;
      for (int k = 0; k < 12; ++k) {
        all_valid = all_valid && m.at(j, k) >= 0.0;
        sum += m.at(j, k);
      }
      all_valid = all_valid && std::fabs(sum - 1.0) <= tdp::kRowSumTolerance;
    }
  }
  CHECK(all_valid);
}

}  // namespace
