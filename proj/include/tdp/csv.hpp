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

#ifndef TDP_CSV_HPP_
#define TDP_CSV_HPP_

#include <filesystem>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "tdp/allocate.hpp"
#include "tdp/matrix.hpp"
#include "tdp/types.hpp"

// CSV is the single interchange format. Values are written with 17
// significant digits, so save/load round-trips reproduce doubles exactly.
// Lines starting with '#' are comments (used for manifest headers) and are
// skipped on load.

namespace tdp::csv {

// Formats a double with enough digits to round-trip exactly.
std::string format_double(double v);

// Low-level helpers shared by the loaders. Both throw ParseError with
// 1-based line/column positions.
std::vector<std::string_view> split_fields(std::string_view line);
double parse_double(std::string_view field, int line, int column);
long long parse_int(std::string_view field, int line, int column);

// Reads the next content line (skipping blanks and '#' comments) into
// `out`; returns false at end of stream. `line_no` tracks the physical
// line number.
bool next_content_line(std::istream& in, std::string& out, int& line_no);

// Matrix: n lines of n comma-separated decimals, no header.
TransitionMatrix load_matrix(std::istream& in);
TransitionMatrix load_matrix(const std::filesystem::path& path);
void save_matrix(const TransitionMatrix& m, std::ostream& out,
                 std::string_view manifest = {});
void save_matrix(const TransitionMatrix& m, const std::filesystem::path& path,
                 std::string_view manifest = {});

// Trace: header `t,epsilon,bpl,fpl,tpl`.
LeakageTrace load_trace(std::istream& in);
LeakageTrace load_trace(const std::filesystem::path& path);
void save_trace(const LeakageTrace& trace, std::ostream& out,
                std::string_view manifest = {});
void save_trace(const LeakageTrace& trace, const std::filesystem::path& path,
                std::string_view manifest = {});

// Schedule: header `t,epsilon`; loaded schedules carry no shape invariant.
BudgetSchedule load_schedule(std::istream& in);
BudgetSchedule load_schedule(const std::filesystem::path& path);
void save_schedule(const BudgetSchedule& schedule, std::ostream& out,
                   std::string_view manifest = {});
void save_schedule(const BudgetSchedule& schedule,
                   const std::filesystem::path& path,
                   std::string_view manifest = {});

// Released snapshots: header `t,loc_1,...,loc_n,epsilon_used` with the
// noisy (real-valued) counts.
void save_release(const std::vector<ReleaseSnapshot>& snapshots,
                  std::ostream& out, std::string_view manifest = {});
void save_release(const std::vector<ReleaseSnapshot>& snapshots,
                  const std::filesystem::path& path,
                  std::string_view manifest = {});

// Utility report: header `t,analytic_abs_noise,empirical_abs_noise`.
void save_utility(const UtilityReport& report, std::ostream& out,
                  std::string_view manifest = {});
void save_utility(const UtilityReport& report, const std::filesystem::path& path,
                  std::string_view manifest = {});

}  // namespace tdp::csv

#endif  // TDP_CSV_HPP_
