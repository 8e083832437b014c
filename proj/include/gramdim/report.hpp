// Copyright 2026 The gramdim Authors.
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

#ifndef GRAMDIM_REPORT_HPP
#define GRAMDIM_REPORT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "gramdim/errors.hpp"
#include "gramdim/polynomial.hpp"
#include "gramdim/rational.hpp"

namespace gramdim {

class ParseError : public InvalidInput {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InvalidInput("syntax error at position " + std::to_string(position) + ": " + what),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Either an ascending coefficient list ("1,0,2,0,1", "1 0 2 0 1",
// "[1, -1/2, 0.25]") or an expression in x with + - * ^, parentheses,
// implicit multiplication ("2x^2") and integer, p/q or decimal literals.
Polynomial parse_polynomial(std::string_view text);
Polynomial parse_coefficient_list(std::string_view text);
Polynomial parse_expression(std::string_view text);

enum class Command { kAnalyze, kSos, kDim, kLift, kSelftest };
enum class OutputMode { kText, kJson };

std::optional<Command> parse_command(std::string_view name);

struct AnalysisRequest {
  Command command = Command::kAnalyze;
  std::string input;
  bool coefficient_list = false;
  std::optional<std::pair<Rational, Rational>> lift_params;
  std::optional<double> rank_tol;
  int samples = 10000;
  OutputMode output_mode = OutputMode::kText;
};

struct RunResult {
  std::string out;
  std::string err;
  int exit_code = 0;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitDisagreement = 1;
inline constexpr int kExitInputError = 2;

// Executes one request. Never throws for bad input: InvalidInput and
// NotNonnegative become a diagnostic with exit code 2, NumericalFailure a
// diagnostic with exit code 1.
RunResult run(const AnalysisRequest& request);

}  // namespace gramdim

#endif  // GRAMDIM_REPORT_HPP
