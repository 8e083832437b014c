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

#include "gramdim/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

#include "gramdim/errors.hpp"
#include "gramdim/gram_space.hpp"
#include "gramdim/lift_iso.hpp"
#include "gramdim/sos_cert.hpp"
#include "gramdim/spectra_dim.hpp"

namespace gramdim {

namespace {

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Polynomial random_integer_poly(std::mt19937_64& rng, int degree, int bound, bool exact_degree) {
  if (degree < 0) return {};
  std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
  for (auto& v : c) v = uniform_int(rng, -bound, bound);
  if (exact_degree) {
    while (c.back() == 0) c.back() = uniform_int(rng, -bound, bound);
  }
  return Polynomial(std::move(c));
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

}  // namespace

Polynomial random_positive(int half_degree, std::mt19937_64& rng) {
  const Polynomial a = random_integer_poly(rng, half_degree, 2, /*exact_degree=*/true);
  const Polynomial b = random_integer_poly(rng, half_degree - 1, 2, /*exact_degree=*/false);
  return a * a + b * b + Polynomial::constant(1);
}

std::vector<BatteryCase> theorem_battery(std::uint64_t seed, int cases_per_pair) {
  std::mt19937_64 rng(seed);
  std::vector<BatteryCase> cases;
  for (int d = 1; d <= 8; ++d) {
    for (int e = 0; e <= d; ++e) {
      for (int rep = 0; rep < cases_per_pair; ++rep) {
        std::map<int, int> half_mult;
        for (int j = 0; j < e; ++j) ++half_mult[uniform_int(rng, -2, 2)];
        BatteryCase c;
        c.d = d;
        c.e = e;
        c.f = random_positive(d - e, rng);
        for (const auto& [r, m] : half_mult) {
          c.roots.emplace_back(r, m);
          c.f *= power(Polynomial::linear_factor(r), 2 * m);
        }
        cases.push_back(std::move(c));
      }
    }
  }
  return cases;
}

std::vector<Polynomial> sos_battery(std::uint64_t seed, int count, int repeated) {
  std::mt19937_64 rng(seed);
  std::vector<Polynomial> out;
  for (int i = 0; i < count; ++i) {
    const bool with_root = i >= count - repeated;
    const int mult = with_root ? uniform_int(rng, 1, 2) : 0;
    const int max_half = 10 - mult;
    Polynomial f;
    while (f.is_zero()) {
      const Polynomial a = random_integer_poly(rng, uniform_int(rng, 0, max_half), 3, true);
      const Polynomial b = random_integer_poly(rng, uniform_int(rng, 0, max_half), 3, false);
      f = a * a + b * b;
    }
    if (with_root) f *= power(Polynomial::linear_factor(uniform_int(rng, -2, 2)), 2 * mult);
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<LiftCase> lift_battery(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<LiftCase> out;
  for (int i = 0; i < count; ++i) {
    const int d = uniform_int(rng, 0, 3);
    const int e = d == 0 ? 0 : uniform_int(rng, 0, d - 1);
    Polynomial f = random_positive(d - e, rng);
    for (int j = 0; j < e; ++j) f *= power(Polynomial::linear_factor(uniform_int(rng, -2, 2)), 2);
    Rational a = uniform_int(rng, -2, 2);
    Rational b(uniform_int(rng, -3, 3), uniform_int(rng, 1, 2));
    b.canonicalize();
    if (a == 0 && b == 0) a = 1;
    out.push_back({std::move(f), a, b});
  }
  return out;
}

CriterionResult check_theorem_battery() {
  CriterionResult r{1, "Theorem battery: computed dim == binom(d-e, 2)", false, ""};
  const auto cases = theorem_battery();
  int agree = 0;
  std::string first_failure;
  for (const auto& c : cases) {
    const DimensionReport rep = verify_dimension(c.f);
    if (rep.agreement && rep.e == c.e) {
      ++agree;
    } else if (first_failure.empty()) {
      first_failure = "; first failure " + to_string(c.f) + " predicted " + std::to_string(rep.predicted) +
                      " computed " + (rep.computed ? std::to_string(*rep.computed) : "undetermined");
    }
  }
  r.passed = cases.size() >= 60 && agree == static_cast<int>(cases.size());
  r.detail = std::to_string(agree) + "/" + std::to_string(cases.size()) + " cases agree" + first_failure;
  return r;
}

CriterionResult check_full_dimension_formulas() {
  CriterionResult r{2, "Full-dimension formula: binom(d,2) / 0 / 6", true, ""};
  int checked = 0;
  for (int d = 1; d <= 20; ++d, ++checked) {
    if (expected_full_dimension(1, d) != binomial(static_cast<std::uint64_t>(d), 2)) {
      r.passed = false;
      r.detail += "(i) fails at d=" + std::to_string(d) + "; ";
    }
  }
  for (int n = 1; n <= 10; ++n, ++checked) {
    if (expected_full_dimension(n, 1) != 0) {
      r.passed = false;
      r.detail += "(ii) fails at n=" + std::to_string(n) + "; ";
    }
  }
  ++checked;
  if (expected_full_dimension(2, 2) != 6) {
    r.passed = false;
    r.detail += "(iii) fails; ";
  }
  r.detail += std::to_string(checked) + " values checked";
  return r;
}

CriterionResult check_brute_force_oracle() {
  CriterionResult r{3, "Brute-force sampling oracle matches (d <= 3)", false, ""};
  int total = 0;
  int agree = 0;
  std::string first_failure;
  for (const auto& c : theorem_battery()) {
    if (c.d > 3) continue;
    ++total;
    const DimensionReport rep = verify_dimension(c.f);
    const int brute = brute_force_dimension(c.f, 10000);
    if (rep.computed && *rep.computed == brute) {
      ++agree;
    } else if (first_failure.empty()) {
      first_failure = "; first failure " + to_string(c.f) + " brute " + std::to_string(brute);
    }
  }
  r.passed = total > 0 && agree == total;
  r.detail = std::to_string(agree) + "/" + std::to_string(total) + " cases agree" + first_failure;
  return r;
}

CriterionResult check_worked_spectrahedron() {
  CriterionResult r{4, "Worked example x^4+2x^2+1: interval [-1,1], dim 1", false, ""};
  const Polynomial f({1, 0, 2, 0, 1});
  const GramAffineSpace space = build_gram_space(f);
  const PsdInterval seg = psd_line_search(space.q0, space.kernel.at(0));
  const DimensionReport rep = verify_dimension(f);
  const double err = std::max(std::abs(seg.t_min + 1), std::abs(seg.t_max - 1));
  r.passed = err <= 1e-8 && rep.computed == 1;
  r.detail = "interval error " + sci(err) + ", dim " + (rep.computed ? std::to_string(*rep.computed) : "?");
  return r;
}

CriterionResult check_sos_residuals() {
  CriterionResult r{5, "Two-squares residual <= 1e-8", false, ""};
  const auto polys = sos_battery();
  int ok = 0;
  double worst = 0;
  for (const auto& f : polys) {
    try {
      const SosCertificate c = two_squares(f);
      worst = std::max(worst, c.residual);
      if (c.residual <= kSosResidualLimit) ++ok;
    } catch (const NumericalFailure&) {
      worst = INFINITY;
    }
  }
  r.passed = ok == static_cast<int>(polys.size());
  r.detail = std::to_string(ok) + "/" + std::to_string(polys.size()) + " certificates, worst residual " + sci(worst);
  return r;
}

CriterionResult check_lift_isomorphism() {
  CriterionResult r{6, "Lifting isomorphism checks", false, ""};
  const auto cases = lift_battery();
  int ok = 0;
  double worst = 0;
  std::string first_failure;
  for (const auto& c : cases) {
    const IsomorphismReport rep = verify_isomorphism(c.f, c.a, c.b);
    worst = std::max(worst, rep.coefficient_error);
    if (rep.ok()) {
      ++ok;
    } else if (first_failure.empty()) {
      first_failure = "; first failure " + to_string(c.f) + " a=" + to_string(c.a) + " b=" + to_string(c.b);
    }
  }
  r.passed = ok == static_cast<int>(cases.size());
  r.detail = std::to_string(ok) + "/" + std::to_string(cases.size()) + " cases, worst coefficient error " +
             sci(worst) + first_failure;
  return r;
}

std::vector<CriterionResult> run_selftest() {
  return {check_theorem_battery(),  check_full_dimension_formulas(), check_brute_force_oracle(),
          check_worked_spectrahedron(), check_sos_residuals(),           check_lift_isomorphism()};
}

}  // namespace gramdim
