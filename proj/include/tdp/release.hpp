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

#ifndef TDP_RELEASE_HPP_
#define TDP_RELEASE_HPP_

#include <cstdint>
#include <istream>
#include <vector>

#include "tdp/types.hpp"

namespace tdp {

// Parses a counts stream (header `t,loc_1,...,loc_n`) into snapshots with
// true_counts populated. Every row must have the same width
// (InconsistentWidthError) and nonnegative counts (NegativeCountError).
std::vector<ReleaseSnapshot> ingest_counts(std::istream& in);

// Laplace mechanism per timestep: each count gets independent noise with
// scale 1/eps_t. Sensitivity is 1 -- each user contributes to exactly one
// cell per timestep. Noise streams are derived from (seed, snapshot.t), so
// output is reproducible and snapshots could be perturbed in any order.
// true_counts pass through unchanged; no rounding or clamping of the noisy
// values (post-processing would distort utility measurements).
std::vector<ReleaseSnapshot> release_sequence(std::vector<ReleaseSnapshot> snapshots,
                                              const BudgetSchedule& schedule,
                                              std::uint64_t seed);

}  // namespace tdp

#endif  // TDP_RELEASE_HPP_
