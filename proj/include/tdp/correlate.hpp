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

#ifndef TDP_CORRELATE_HPP_
#define TDP_CORRELATE_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "tdp/matrix.hpp"

namespace tdp {

// Deterministic matrix: row j is the point mass on column perm[j]. The
// strongest possible correlation; its loss function is the identity.
TransitionMatrix strongest_matrix(int n, std::span<const int> perm);

// The single n-cycle j -> (j+1) mod n. Default permutation for generated
// strongest matrices; asymmetric, so smoothing it exercises both row
// orders of every pair.
std::vector<int> cycle_permutation(int n);

// Additive smoothing toward the uniform matrix: entry (p + s) / rowsum.
// Smaller s keeps the correlation stronger; s -> infinity is uniform.
// Degrees of smoothing are only comparable at equal n.
TransitionMatrix smooth(const TransitionMatrix& P, double s);

// Rows drawn uniformly from [0,1] and normalized. Fixed seed, fixed output.
TransitionMatrix random_stochastic(int n, std::uint64_t seed);

}  // namespace tdp

#endif  // TDP_CORRELATE_HPP_
