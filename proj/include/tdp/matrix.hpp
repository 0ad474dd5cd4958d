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

#ifndef TDP_MATRIX_HPP_
#define TDP_MATRIX_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tdp {

// Tolerance on the deviation of each row sum from 1. Rows inside the
// tolerance are renormalized; rows outside are rejected.
inline constexpr double kRowSumTolerance = 1e-9;

// Row-stochastic n x n matrix of conditional probabilities between the n
// values of the data domain. Row j holds the distribution conditioned on
// value j. Immutable after construction; safe to share across threads.
class TransitionMatrix {
 public:
  // Validates and normalizes a square probability grid.
  // Throws NonSquareError, NegativeEntryError or RowSumError.
  static TransitionMatrix validate(const std::vector<std::vector<double>>& raw);

  int n() const { return n_; }
  double at(int row, int col) const { return cells_[static_cast<std::size_t>(row) * n_ + col]; }
  std::span<const double> row(int r) const {
    return std::span<const double>(cells_).subspan(static_cast<std::size_t>(r) * n_, n_);
  }
  std::span<const double> cells() const { return cells_; }

  bool operator==(const TransitionMatrix& other) const = default;

 private:
  TransitionMatrix(int n, std::vector<double> cells)
      : n_(n), cells_(std::move(cells)) {}

  int n_;
  std::vector<double> cells_;  // row-major
};

// Spec-level alias for TransitionMatrix::validate.
TransitionMatrix validate_matrix(const std::vector<std::vector<double>>& raw);

// One user's correlation knowledge attributed to the adversary. An absent
// matrix means the adversary does not know that direction of correlation;
// the corresponding leakage then stays at the per-release floor.
struct AdversaryModel {
  std::string user_id;
  std::optional<TransitionMatrix> backward;  // Pr(value at t-1 | value at t)
  std::optional<TransitionMatrix> forward;   // Pr(value at t | value at t-1)

  AdversaryModel(std::string id, std::optional<TransitionMatrix> b,
                 std::optional<TransitionMatrix> f);
};

}  // namespace tdp

#endif  // TDP_MATRIX_HPP_
