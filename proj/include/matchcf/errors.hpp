// Copyright 2026 The matchcf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MATCHCF_ERRORS_HPP
#define MATCHCF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace matchcf {

enum class ErrorCode {
  index_out_of_range,
  self_loop,
  duplicate_edge,
  negative_weight,
  too_many_vertices,
  invalid_mask,
  syntax_error,
  variable_count_mismatch,
  arity_mismatch,
  too_large_for_brute_force,
  node_cap_exceeded,
  missing_assignment,
  division_by_zero,
  no_convergence,
  invalid_argument,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  // Resource limits get a distinct exit status in the CLI.
  bool is_limit() const noexcept {
    switch (code_) {
      case ErrorCode::too_many_vertices:
      case ErrorCode::too_large_for_brute_force:
      case ErrorCode::node_cap_exceeded:
      case ErrorCode::no_convergence:
        return true;
      default:
        return false;
    }
  }

 private:
  ErrorCode code_;
};

// Parse errors carry the 1-based line number of the offending input line.
class SyntaxError : public Error {
 public:
  SyntaxError(int line, const std::string& message)
      : Error(ErrorCode::syntax_error,
              "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace matchcf

#endif  // MATCHCF_ERRORS_HPP
