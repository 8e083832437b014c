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

#ifndef GRAMDIM_SELFTEST_HPP
#define GRAMDIM_SELFTEST_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gramdim/polynomial.hpp"
#include "gramdim/rational.hpp"

namespace gramdim {

/// f = prod (x - r_i)^(2 e_i) * g with integer roots and g = a^2 + b^2 + 1.
struct BatteryCase {
  Polynomial f;
  int d = 0;
  int e = 0;
  std::vector<std::pair<int, int>> roots;  // (r_i, e_i)
};

// a^2 + b^2 + 1 with deg a = half_degree, deg b < half_degree, integer
// coefficients in [-2, 2]; a constant >= 1 when half_degree == 0.
Polynomial random_positive(int half_degree, std::mt19937_64& rng);

// Every (d, e) with 1 <= d <= 8, 0 <= e <= d, cases_per_pair times, roots
// drawn from {-2, ..., 2}.
std::vector<BatteryCase> theorem_battery(std::uint64_t seed = 1, int cases_per_pair = 2);

// Sums of two squares of random integer polynomials, degree <= 20. The
// last `repeated` entries carry a squared real-root factor.
std::vector<Polynomial> sos_battery(std::uint64_t seed = 2, int count = 100, int repeated = 20);

struct LiftCase {
  Polynomial f;
  Rational a;
  Rational b;
};

std::vector<LiftCase> lift_battery(std::uint64_t seed = 3, int count = 20);

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

CriterionResult check_theorem_battery();
CriterionResult check_full_dimension_formulas();
CriterionResult check_brute_force_oracle();
CriterionResult check_worked_spectrahedron();
CriterionResult check_sos_residuals();
CriterionResult check_lift_isomorphism();

// Criteria 1-6 in order.
std::vector<CriterionResult> run_selftest();

}  // namespace gramdim

#endif  // GRAMDIM_SELFTEST_HPP
