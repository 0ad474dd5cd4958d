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

#include "tdp/correlate.hpp"

#include <cmath>
#include <string>

#include "tdp/error.hpp"
#include "tdp/rng.hpp"

namespace tdp {

TransitionMatrix strongest_matrix(int n, std::span<const int> perm) {
  if (n < 1 || static_cast<int>(perm.size()) != n) {
    throw InvalidPermutationError("permutation length must equal n");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[p]) {
      throw InvalidPermutationError("not a permutation of 0.." +
                                    std::to_string(n - 1));
    }
    seen[p] = true;
  }
  std::vector<std::vector<double>> grid(
      static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n), 0.0));
  for (int j = 0; j < n; ++j) {
    grid[j][perm[j]] = 1.0;
  }
  return TransitionMatrix::validate(grid);
}

std::vector<int> cycle_permutation(int n) {
  if (n < 1) {
    throw InvalidPermutationError("n must be >= 1");
  }
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    perm[j] = (j + 1) % n;
  }
  return perm;
}

TransitionMatrix smooth(const TransitionMatrix& P, double s) {
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw NonPositiveSmoothingError("smoothing parameter must be positive");
  }
  const int n = P.n();
  std::vector<std::vector<double>> grid(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    double sum = 0.0;
    for (int k = 0; k < n; ++k) {
      sum += P.at(j, k) + s;
    }
    grid[j].resize(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
      grid[j][k] = (P.at(j, k) + s) / sum;
    }
  }
  return TransitionMatrix::validate(grid);
}

TransitionMatrix random_stochastic(int n, std::uint64_t seed) {
  if (n < 1) {
    throw NonSquareError("n must be >= 1");
  }
  SplitMix64 rng(seed);
  std::vector<std::vector<double>> grid(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    grid[j].resize(static_cast<std::size_t>(n));
    double sum = 0.0;
    for (int k = 0; k < n; ++k) {
      grid[j][k] = rng.next_unit();
      sum += grid[j][k];
    }
    for (int k = 0; k < n; ++k) {
      grid[j][k] /= sum;
    }
  }
  return TransitionMatrix::validate(grid);
}

}  // namespace tdp
