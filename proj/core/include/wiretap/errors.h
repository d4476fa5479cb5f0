/*
 * Copyright 2026 The Wiretap LP Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef WIRETAP_ERRORS_H_
#define WIRETAP_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wiretap {

// Bad arguments: length mismatches, out-of-range probabilities, unsupported
// forms. Maps to CLI exit code 1.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A form outside the family a construction is defined for.
class UnsupportedFormError : public UsageError {
 public:
  using UsageError::UsageError;
};

// Input data that parses but violates a structural invariant (e.g. a code
// table that is not a partition). Maps to CLI exit code 2.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed table text. Carries the 1-based line number of the offending
// line.
class ParseError : public ValidationError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : ValidationError("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A table that was asserted to be a coset code but whose conditional
// equivocation depends on the observation.
class NotLinearError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// A computation would exceed a configured size cap. Maps to exit code 3.
class ResourceCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Simplex failures: singular pivots, iteration-guard trips, infeasibility.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two independent evaluations of the same quantity disagreed.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace wiretap

#endif  // WIRETAP_ERRORS_H_
