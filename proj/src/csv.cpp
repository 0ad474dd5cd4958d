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

#include "tdp/csv.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>

#include "tdp/error.hpp"

namespace tdp::csv {

namespace {

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ValidationError("cannot open " + path.string() + " for reading");
  }
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw ValidationError("cannot open " + path.string() + " for writing");
  }
  return out;
}

void write_manifest(std::ostream& out, std::string_view manifest) {
  if (!manifest.empty()) {
    out << "# " << manifest << "\n";
  }
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

double parse_double(std::string_view field, int line, int column) {
  field = trim(field);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size() || field.empty()) {
    throw ParseError(line, column,
                     "line " + std::to_string(line) + ", field " +
                         std::to_string(column) + ": '" + std::string(field) +
                         "' is not a number");
  }
  return value;
}

long long parse_int(std::string_view field, int line, int column) {
  field = trim(field);
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size() || field.empty()) {
    throw ParseError(line, column,
                     "line " + std::to_string(line) + ", field " +
                         std::to_string(column) + ": '" + std::string(field) +
                         "' is not an integer");
  }
  return value;
}

bool next_content_line(std::istream& in, std::string& out, int& line_no) {
  while (std::getline(in, out)) {
    ++line_no;
    std::string_view v = trim(out);
    if (v.empty() || v.front() == '#') {
      continue;
    }
    return true;
  }
  return false;
}

TransitionMatrix load_matrix(std::istream& in) {
  std::vector<std::vector<double>> grid;
  std::string line;
  int line_no = 0;
  std::size_t width = 0;
  while (next_content_line(in, line, line_no)) {
    const auto fields = split_fields(line);
    if (width == 0) {
      width = fields.size();
    } else if (fields.size() != width) {
      throw ParseError(line_no, static_cast<int>(fields.size()),
                       "line " + std::to_string(line_no) + ": expected " +
                           std::to_string(width) + " fields, got " +
                           std::to_string(fields.size()));
    }
    std::vector<double> row;
    row.reserve(fields.size());
    for (std::size_t c = 0; c < fields.size(); ++c) {
      row.push_back(parse_double(fields[c], line_no, static_cast<int>(c) + 1));
    }
    grid.push_back(std::move(row));
  }
  return TransitionMatrix::validate(grid);
}

TransitionMatrix load_matrix(const std::filesystem::path& path) {
  std::ifstream in = open_in(path);
  return load_matrix(in);
}

void save_matrix(const TransitionMatrix& m, std::ostream& out,
                 std::string_view manifest) {
  write_manifest(out, manifest);
  for (int r = 0; r < m.n(); ++r) {
    for (int c = 0; c < m.n(); ++c) {
      if (c > 0) out << ',';
      out << format_double(m.at(r, c));
    }
    out << '\n';
  }
}

void save_matrix(const TransitionMatrix& m, const std::filesystem::path& path,
                 std::string_view manifest) {
  std::ofstream out = open_out(path);
  save_matrix(m, out, manifest);
}

namespace {

void expect_header(std::istream& in, std::string_view expected, int& line_no) {
  std::string line;
  if (!next_content_line(in, line, line_no)) {
    throw ParseError(line_no, 1, "missing header line");
  }
  if (trim(line) != expected) {
    throw ParseError(line_no, 1,
                     "expected header '" + std::string(expected) + "', got '" +
                         line + "'");
  }
}

}  // namespace

LeakageTrace load_trace(std::istream& in) {
  int line_no = 0;
  expect_header(in, "t,epsilon,bpl,fpl,tpl", line_no);
  std::vector<LeakageEntry> entries;
  std::string line;
  while (next_content_line(in, line, line_no)) {
    const auto fields = split_fields(line);
    if (fields.size() != 5) {
      throw ParseError(line_no, static_cast<int>(fields.size()),
                       "line " + std::to_string(line_no) + ": expected 5 fields");
    }
    LeakageEntry e;
    e.t = static_cast<int>(parse_int(fields[0], line_no, 1));
    e.epsilon = parse_double(fields[1], line_no, 2);
    e.bpl = parse_double(fields[2], line_no, 3);
    e.fpl = parse_double(fields[3], line_no, 4);
    e.tpl = parse_double(fields[4], line_no, 5);
    entries.push_back(e);
  }
  return LeakageTrace("file", std::move(entries));
}

LeakageTrace load_trace(const std::filesystem::path& path) {
  std::ifstream in = open_in(path);
  return load_trace(in);
}

void save_trace(const LeakageTrace& trace, std::ostream& out,
                std::string_view manifest) {
  write_manifest(out, manifest);
  out << "t,epsilon,bpl,fpl,tpl\n";
  for (const LeakageEntry& e : trace.entries()) {
    out << e.t << ',' << format_double(e.epsilon) << ',' << format_double(e.bpl)
        << ',' << format_double(e.fpl) << ',' << format_double(e.tpl) << '\n';
  }
}

void save_trace(const LeakageTrace& trace, const std::filesystem::path& path,
                std::string_view manifest) {
  std::ofstream out = open_out(path);
  save_trace(trace, out, manifest);
}

BudgetSchedule load_schedule(std::istream& in) {
  int line_no = 0;
  expect_header(in, "t,epsilon", line_no);
  std::vector<double> steps;
  std::string line;
  while (next_content_line(in, line, line_no)) {
    const auto fields = split_fields(line);
    if (fields.size() != 2) {
      throw ParseError(line_no, static_cast<int>(fields.size()),
                       "line " + std::to_string(line_no) + ": expected 2 fields");
    }
    const long long t = parse_int(fields[0], line_no, 1);
    if (t != static_cast<long long>(steps.size()) + 1) {
      throw ParseError(line_no, 1, "schedule timesteps must be 1,2,...");
    }
    steps.push_back(parse_double(fields[1], line_no, 2));
  }
  return BudgetSchedule::from_steps(std::move(steps));
}

BudgetSchedule load_schedule(const std::filesystem::path& path) {
  std::ifstream in = open_in(path);
  return load_schedule(in);
}

void save_schedule(const BudgetSchedule& schedule, std::ostream& out,
                   std::string_view manifest) {
  if (schedule.unbounded()) {
    throw ValidationError("cannot save an unbounded schedule; materialize first");
  }
  write_manifest(out, manifest);
  out << "t,epsilon\n";
  const auto& steps = schedule.per_step();
  for (std::size_t i = 0; i < steps.size(); ++i) {
    out << (i + 1) << ',' << format_double(steps[i]) << '\n';
  }
}

void save_schedule(const BudgetSchedule& schedule,
                   const std::filesystem::path& path, std::string_view manifest) {
  std::ofstream out = open_out(path);
  save_schedule(schedule, out, manifest);
}

void save_release(const std::vector<ReleaseSnapshot>& snapshots,
                  std::ostream& out, std::string_view manifest) {
  write_manifest(out, manifest);
  const std::size_t n = snapshots.empty() ? 0 : snapshots.front().noisy_counts.size();
  out << 't';
  for (std::size_t c = 0; c < n; ++c) {
    out << ",loc_" << (c + 1);
  }
  out << ",epsilon_used\n";
  for (const ReleaseSnapshot& s : snapshots) {
    out << s.t;
    for (double v : s.noisy_counts) {
      out << ',' << format_double(v);
    }
    out << ',' << format_double(s.epsilon_used) << '\n';
  }
}

void save_release(const std::vector<ReleaseSnapshot>& snapshots,
                  const std::filesystem::path& path, std::string_view manifest) {
  std::ofstream out = open_out(path);
  save_release(snapshots, out, manifest);
}

void save_utility(const UtilityReport& report, std::ostream& out,
                  std::string_view manifest) {
  write_manifest(out, manifest);
  out << "t,analytic_abs_noise,empirical_abs_noise\n";
  for (const UtilityRow& r : report) {
    out << r.t << ',' << format_double(r.analytic_abs_noise) << ','
        << format_double(r.empirical_abs_noise) << '\n';
  }
}

void save_utility(const UtilityReport& report, const std::filesystem::path& path,
                  std::string_view manifest) {
  std::ofstream out = open_out(path);
  save_utility(report, out, manifest);
}

}  // namespace tdp::csv
