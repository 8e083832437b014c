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

// gramdim: dimension of Gram spectrahedra of univariate polynomials.
//
//   gramdim analyze "x^4+2x^2+1"
//   gramdim dim "1,0,2,0,1" --json
//   gramdim lift "x^2+1" --lift 2 3
//   gramdim selftest --json

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "gramdim/rational.hpp"
#include "gramdim/report.hpp"

namespace {

std::optional<double> rank_tol_from_env() {
  const char* value = std::getenv("GRAMDIM_RANK_TOL");
  if (value == nullptr || *value == '\0') return std::nullopt;
  char* end = nullptr;
  const double tol = std::strtod(value, &end);
  if (end == value || *end != '\0' || !(tol > 0)) {
    throw gramdim::InvalidInput(std::string("GRAMDIM_RANK_TOL is not a positive number: ") + value);
  }
  return tol;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dimension of Gram spectrahedra of univariate polynomials"};
  app.require_subcommand(1);

  std::string command;
  std::string polynomial;
  bool coeffs = false;
  bool json = false;
  double rank_tol = 0;
  std::vector<std::string> lift;
  int samples = 10000;

  auto add_common = [&](CLI::App* sub, bool needs_polynomial) {
    if (needs_polynomial) {
      sub->add_option("polynomial", polynomial,
                      "Expression in x, or ascending coefficient list (constant first)")
          ->required();
      sub->add_flag("--coeffs", coeffs, "Read the polynomial as an ascending coefficient list");
    }
    sub->add_flag("--json", json, "Emit JSON");
    sub->add_option("--rank-tol", rank_tol, "Relative rank threshold (default 1e-8)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--samples", samples, "Samples for randomized oracles")->check(CLI::PositiveNumber);
    sub->callback([&, sub] { command = sub->get_name(); });
  };

  add_common(app.add_subcommand("analyze", "Nonnegativity, excess, dimension and SOS summary"), true);
  add_common(app.add_subcommand("sos", "Two-squares certificate and its Gram point"), true);
  add_common(app.add_subcommand("dim", "Predicted vs computed spectrahedron dimension"), true);
  auto* lift_cmd = app.add_subcommand("lift", "Lift by (a x + b)^2 and check the isomorphism");
  add_common(lift_cmd, true);
  lift_cmd->add_option("--lift", lift, "Coefficients a b of the linear factor")->expected(2)->required();
  add_common(app.add_subcommand("selftest", "Run the acceptance battery"), false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : gramdim::kExitInputError;
  }

  gramdim::AnalysisRequest request;
  request.command = *gramdim::parse_command(command);
  request.input = polynomial;
  request.coefficient_list = coeffs;
  request.samples = samples;
  request.output_mode = json ? gramdim::OutputMode::kJson : gramdim::OutputMode::kText;
  try {
    request.rank_tol = rank_tol_from_env();
    if (rank_tol > 0) request.rank_tol = rank_tol;
    if (!lift.empty()) {
      request.lift_params.emplace(gramdim::parse_rational(lift[0]), gramdim::parse_rational(lift[1]));
    }
  } catch (const gramdim::InvalidInput& e) {
    std::cerr << "error (invalid_input): " << e.what() << "\n";
    return gramdim::kExitInputError;
  }

  const gramdim::RunResult result = gramdim::run(request);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
