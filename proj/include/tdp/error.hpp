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

#ifndef TDP_ERROR_HPP_
#define TDP_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace tdp {

// Root of the library's exception hierarchy. The three branches below map
// onto distinct CLI exit codes: ValidationError -> 2, InfeasibleError -> 3,
// InternalError -> 4.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad input: malformed files, non-stochastic matrices, out-of-range
// parameters.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// The requested privacy target cannot be met for the given correlations.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// A numerical guard tripped (should not happen for valid inputs).
class InternalError : public Error {
 public:
  using Error::Error;
};

class NonSquareError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NegativeEntryError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class RowSumError : public ValidationError {
 public:
  RowSumError(int row, double sum, const std::string& what)
      : ValidationError(what), row_(row), sum_(sum) {}
  int row() const { return row_; }
  double sum() const { return sum_; }

 private:
  int row_;
  double sum_;
};

class ParseError : public ValidationError {
 public:
  ParseError(int line, int column, const std::string& what)
      : ValidationError(what), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

class InvalidAlphaError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class TooLargeError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class InfeasibleCandidateError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class EmptyScheduleError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NonPositiveEpsilonError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NonPositiveAlphaError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class EmptyUserSetError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class IndexOutOfRangeError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NonPositiveSmoothingError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class InvalidPermutationError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class HorizonTooShortError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class InconsistentWidthError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NegativeCountError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class ScheduleTooShortError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Correlation so strong (q = 1, d = 0) that no positive per-step budget
// keeps the accumulated leakage finite over an unbounded horizon.
class StrongestCorrelationError : public InfeasibleError {
 public:
  using InfeasibleError::InfeasibleError;
};

class StabilizationFailureError : public InternalError {
 public:
  using InternalError::InternalError;
};

class BracketError : public InternalError {
 public:
  using InternalError::InternalError;
};

}  // namespace tdp

#endif  // TDP_ERROR_HPP_
