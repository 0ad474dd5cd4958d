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

using tdp::oracle::LfpInstance;
using tdp::oracle::solve_pair_bruteforce;
using tdp::oracle::verify_dinkelbach;

TEST_CASE("bruteforce handles the canonical pairs") {
  CHECK(solve_pair_bruteforce(LfpInstance({1.0, 0.0}, {0.0, 1.0}, 0.5)) ==
        doctest::Approx(0.5).epsilon(1e-14));
  CHECK(solve_pair_bruteforce(LfpInstance({0.5, 0.5}, {0.5, 0.5}, 2.0)) == 0.0);
  CHECK(solve_pair_bruteforce(LfpInstance({0.8, 0.2}, {0.0, 1.0}, 0.1)) ==
        doctest::Approx(std::log(0.8 * (std::exp(0.1) - 1.0) + 1.0))
            .epsilon(1e-14));
}

TEST_CASE("bruteforce validates its instance") {
  CHECK_THROWS_AS(LfpInstance({0.5, 0.6}, {0.5, 0.5}, 1.0), tdp::ValidationError);
  CHECK_THROWS_AS(LfpInstance({0.5, 0.5}, {0.5, 0.5}, -1.0),
                  tdp::InvalidAlphaError);
  std::vector<double> big(21, 0.0);
  big[0] = 1.0;
  CHECK_THROWS_AS(solve_pair_bruteforce(LfpInstance(big, big, 1.0)),
                  tdp::TooLargeError);
}

// Rebuilds the optimal vertex from the solver's kept set and certifies it.
TEST_CASE("dinkelbach certificate accepts optima and rejects impostors") {
  for (int seed = 0; seed < 40; ++seed) {
    const int n = 2 + seed % 6;
    const tdp::TransitionMatrix p = tdp::random_stochastic(n, 9000 + seed);
    const double alpha = 0.2 + 0.4 * (seed % 5);
    const int j = seed % n;
    const int k = (j + 1) % n;
    std::vector<double> q(p.row(j).begin(), p.row(j).end());
    std::vector<double> d(p.row(k).begin(), p.row(k).end());
    const LfpInstance inst(q, d, alpha);

    const tdp::PairSolveResult r = tdp::solve_pair(p.row(j), p.row(k), alpha);
    std::vector<double> x(n, 1.0);
    for (int col : r.plus_set) x[col] = std::exp(alpha);
    CHECK(verify_dinkelbach(inst, x, std::exp(r.value)));

    // All-ones is only optimal when nothing can be gained.
    const double flat = 1.0;  // Q(1)/D(1) = 1
    const bool flat_ok = verify_dinkelbach(inst, std::vector<double>(n, 1.0), flat);
    CHECK(flat_ok == (r.value == 0.0));
  }
}

TEST_CASE("dinkelbach certificate on the degenerate equal-rows case") {
  const LfpInstance inst({0.5, 0.5}, {0.5, 0.5}, 1.0);
  CHECK(verify_dinkelbach(inst, std::vector<double>{1.0, 1.0}, 1.0));
}

TEST_CASE("dinkelbach rejects infeasible candidates") {
  const LfpInstance inst({0.8, 0.2}, {0.0, 1.0}, 0.1);
  CHECK_THROWS_AS(verify_dinkelbach(inst, std::vector<double>{10.0, 1.0}, 1.0),
                  tdp::InfeasibleCandidateError);
  CHECK_THROWS_AS(verify_dinkelbach(inst, std::vector<double>{0.0, 1.0}, 1.0),
                  tdp::InfeasibleCandidateError);
  CHECK_THROWS_AS(verify_dinkelbach(inst, std::vector<double>{1.0}, 1.0),
                  tdp::InfeasibleCandidateError);
}

}  // namespace
