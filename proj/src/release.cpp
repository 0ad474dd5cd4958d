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

#include "tdp/release.hpp"

#include <string>

#include "tdp/csv.hpp"
#include "tdp/error.hpp"
#include "tdp/rng.hpp"

namespace tdp {

std::vector<ReleaseSnapshot> ingest_counts(std::istream& in) {
  int line_no = 0;
  std::string line;
  if (!csv::next_content_line(in, line, line_no)) {
    throw ParseError(line_no, 1, "missing counts header");
  }
  const auto header = csv::split_fields(line);
  if (header.size() < 2 || header[0] != "t") {
    throw ParseError(line_no, 1, "expected header 't,loc_1,...,loc_n'");
  }
  const std::size_t width = header.size();

  std::vector<ReleaseSnapshot> snapshots;
  while (csv::next_content_line(in, line, line_no)) {
    const auto fields = csv::split_fields(line);
    if (fields.size() != width) {
      throw InconsistentWidthError("line " + std::to_string(line_no) +
                                   ": expected " + std::to_string(width) +
                                   " fields, got " + std::to_string(fields.size()));
    }
    ReleaseSnapshot snap;
    snap.t = static_cast<int>(csv::parse_int(fields[0], line_no, 1));
    snap.true_counts.reserve(width - 1);
    for (std::size_t c = 1; c < width; ++c) {
      const long long v = csv::parse_int(fields[c], line_no, static_cast<int>(c) + 1);
      if (v < 0) {
        throw NegativeCountError("line " + std::to_string(line_no) + ", field " +
                                 std::to_string(c + 1) + ": counts must be >= 0");
      }
      snap.true_counts.push_back(v);
    }
    snapshots.push_back(std::move(snap));
  }
  return snapshots;
}

std::vector<ReleaseSnapshot> release_sequence(std::vector<ReleaseSnapshot> snapshots,
                                              const BudgetSchedule& schedule,
                                              std::uint64_t seed) {
  if (!schedule.unbounded() &&
      schedule.per_step().size() < snapshots.size()) {
    throw ScheduleTooShortError("schedule covers " +
                                std::to_string(schedule.per_step().size()) +
                                " steps, " + std::to_string(snapshots.size()) +
                                " snapshots given");
  }
  const std::vector<double> eps =
      snapshots.empty() ? std::vector<double>{}
                        : schedule.materialize(static_cast<int>(snapshots.size()));
  for (std::size_t i = 0; i < snapshots.size(); ++i) {
    ReleaseSnapshot& snap = snapshots[i];
    snap.epsilon_used = eps[i];
    SplitMix64 rng = SplitMix64::substream(seed, static_cast<std::uint64_t>(snap.t));
    snap.noisy_counts.resize(snap.true_counts.size());
    for (std::size_t c = 0; c < snap.true_counts.size(); ++c) {
      snap.noisy_counts[c] =
          static_cast<double>(snap.true_counts[c]) + rng.next_laplace(1.0 / eps[i]);
    }
  }
  return snapshots;
}

}  // namespace tdp
