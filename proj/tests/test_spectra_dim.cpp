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

#include <doctest.h>

#include <cmath>
#include <limits>

#include "gramdim/errors.hpp"
#include "gramdim/selftest.hpp"
#include "gramdim/sos_cert.hpp"
#include "gramdim/spectra_dim.hpp"

using gramdim::Polynomial;
using gramdim::Rational;
using gramdim::SymMatrix;

namespace {

const Polynomial kSquareOfXSquaredPlusOne({1, 0, 2, 0, 1});

SymMatrix worked_point(double t) {
  const auto space = gramdim::build_gram_space(kSquareOfXSquaredPlusOne);
  const double coords[] = {t};
  return space.point(coords);
}

}  // namespace

TEST_CASE("psd line search") {
  SUBCASE("identity along diag(1, -1)") {
    const auto iv = gramdim::psd_line_search(SymMatrix::identity(2), SymMatrix{{1, 0}, {0, -1}});
    CHECK(iv.t_min == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(iv.t_max == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("unbounded ray") {
    const auto iv = gramdim::psd_line_search(SymMatrix{{1, 0}, {0, 0}}, SymMatrix{{0, 0}, {0, 1}});
    CHECK(std::abs(iv.t_min) <= 1e-9);
    CHECK(iv.t_max == std::numeric_limits<double>::infinity());
  }
  SUBCASE("both directions unbounded") {
    const auto iv = gramdim::psd_line_search(SymMatrix::identity(2), SymMatrix(2));
    CHECK(iv.t_min == -std::numeric_limits<double>::infinity());
    CHECK(iv.t_max == std::numeric_limits<double>::infinity());
  }
  SUBCASE("worked spectrahedron") {
    // q0 + tB = [[1, 0, t], [0, 2 - 2t, 0], [t, 0, 1]] is PSD iff |t| <= 1.
    const auto space = gramdim::build_gram_space(kSquareOfXSquaredPlusOne);
    const auto iv = gramdim::psd_line_search(space.q0, space.kernel[0]);
    CHECK(std::abs(iv.t_min + 1) <= 1e-8);
    CHECK(std::abs(iv.t_max - 1) <= 1e-8);
  }
  SUBCASE("infeasible base point") {
    CHECK_THROWS_AS(gramdim::psd_line_search(SymMatrix{{-1}}, SymMatrix{{1}}), gramdim::InvalidInput);
  }
}

TEST_CASE("max rank point") {
  SUBCASE("single point spectrahedron") {
    const Polynomial f = Polynomial::monomial(1, 4);
    const auto space = gramdim::build_gram_space(f);
    const auto result = gramdim::max_rank_point(space, gramdim::two_squares(f).gram_point);
    CHECK(result.rank == 1);
    CHECK(result.converged);
    CHECK((result.point - SymMatrix::unit(3, 2, 2)).max_abs() <= 1e-12);
  }
  SUBCASE("segment endpoints move inside") {
    const auto space = gramdim::build_gram_space(kSquareOfXSquaredPlusOne);
    for (double t : {-1.0, 1.0}) {
      const auto result = gramdim::max_rank_point(space, worked_point(t));
      CHECK(result.rank == 3);
      const double inside = space.coordinates(result.point)[0];
      CHECK(inside > -1);
      CHECK(inside < 1);
    }
  }
  SUBCASE("empty kernel leaves the start unchanged") {
    const auto space = gramdim::build_gram_space(Polynomial({1, 0, 1}));
    const auto result = gramdim::max_rank_point(space, SymMatrix::identity(2));
    CHECK(result.point == SymMatrix::identity(2));
    CHECK(result.rank == 2);
  }
  SUBCASE("infeasible start") {
    const auto space = gramdim::build_gram_space(kSquareOfXSquaredPlusOne);
    CHECK_THROWS_AS(gramdim::max_rank_point(space, worked_point(2)), gramdim::InvalidInput);
  }
}

TEST_CASE("sweep history is monotone and feasible") {
  for (const auto& c : gramdim::theorem_battery(11, 1)) {
    const auto space = gramdim::build_gram_space(c.f);
    const auto variants = gramdim::two_squares_variants(c.f, 16);
    std::vector<SymMatrix> starts;
    for (const auto& v : variants) starts.push_back(v.gram_point);
    for (const auto& result : {gramdim::max_rank_point(space, starts[0]),
                               gramdim::max_rank_point(space, std::span<const SymMatrix>(starts))}) {
      REQUIRE(!result.sweeps.empty());
      for (std::size_t i = 0; i < result.sweeps.size(); ++i) {
        CAPTURE(gramdim::to_string(c.f));
        CHECK(result.sweeps[i].min_eigenvalue_over_trace >= -1e-9);
        CHECK(result.sweeps[i].gram_residual <= 1e-9);
        if (i > 0) CHECK(result.sweeps[i].rank >= result.sweeps[i - 1].rank);
      }
      CHECK(result.sweeps.back().rank == result.rank);
    }
  }
}

TEST_CASE("face dimension") {
  SUBCASE("full rank witness keeps the whole kernel") {
    const auto space = gramdim::build_gram_space(kSquareOfXSquaredPlusOne);
    CHECK(gramdim::face_dimension(space, worked_point(0)) == 1);
  }
  SUBCASE("endpoints are faces of dimension zero") {
    const auto space = gramdim::build_gram_space(kSquareOfXSquaredPlusOne);
    CHECK(gramdim::face_dimension(space, worked_point(1)) == 0);
    CHECK(gramdim::face_dimension(space, worked_point(-1)) == 0);
  }
  SUBCASE("unique Gram matrix") {
    const auto space = gramdim::build_gram_space(Polynomial::monomial(1, 4));
    CHECK(gramdim::face_dimension(space, SymMatrix::unit(3, 2, 2)) == 0);
  }
  SUBCASE("empty kernel") {
    const auto space = gramdim::build_gram_space(Polynomial({1, 0, 1}));
    CHECK(gramdim::face_dimension(space, SymMatrix::identity(2)) == 0);
  }
  SUBCASE("infeasible witness") {
    const auto space = gramdim::build_gram_space(kSquareOfXSquaredPlusOne);
    CHECK_THROWS_AS(gramdim::face_dimension(space, SymMatrix::identity(3)), gramdim::InvalidInput);
  }
}

TEST_CASE("verify_dimension examples") {
  struct Example {
    Polynomial f;
    int d;
    int e;
    int dim;
  };
  const std::vector<Example> examples{
      {kSquareOfXSquaredPlusOne, 2, 0, 1},
      {Polynomial::monomial(1, 4), 2, 2, 0},
      {Polynomial({0, 0, 1, 0, 1}), 2, 1, 0},
      {Polynomial({1, 0, 1}), 1, 0, 0},
      {Polynomial({5}), 0, 0, 0},
      // (x - 1)^2 (x^2 + 1)(x^2 + 4)
      {gramdim::power(Polynomial::linear_factor(1), 2) * Polynomial({4, 0, 5, 0, 1}), 3, 1, 1},
      // (x^2 + 1)(x^2 + 4)(x^2 + 9)
      {Polynomial({4, 0, 5, 0, 1}) * Polynomial({9, 0, 1}), 3, 0, 3},
  };
  for (const auto& ex : examples) {
    CAPTURE(gramdim::to_string(ex.f));
    const auto report = gramdim::verify_dimension(ex.f);
    CHECK(report.d == ex.d);
    CHECK(report.e == ex.e);
    CHECK(report.predicted == static_cast<std::uint64_t>(ex.dim));
    REQUIRE(report.computed.has_value());
    CHECK(*report.computed == ex.dim);
    CHECK(report.agreement);
    CHECK(report.status == gramdim::DimensionStatus::kDetermined);
    CHECK(gramdim::min_eigenvalue(report.max_rank_witness) >= -1e-9 * report.max_rank_witness.trace());
    CHECK(gramdim::build_gram_space(ex.f).residual(report.max_rank_witness) <= 1e-8);
    CHECK(report.witness_rank == ex.d + 1 - ex.e);
  }
  CHECK_THROWS_AS(gramdim::verify_dimension(Polynomial{}), gramdim::InvalidInput);
  CHECK_THROWS_AS(gramdim::verify_dimension(Polynomial({0, 0, 0, 1})), gramdim::NotNonnegative);
  CHECK(gramdim::to_string(gramdim::DimensionStatus::kUndetermined) == "undetermined");
}

TEST_CASE("scaling invariance") {
  const std::vector<Rational> scales{2, 10, Rational(1, 3)};
  for (const auto& c : gramdim::theorem_battery(13, 1)) {
    if (c.d > 5) continue;
    const auto base = gramdim::verify_dimension(c.f);
    REQUIRE(base.computed.has_value());
    for (const auto& s : scales) {
      CAPTURE(gramdim::to_string(c.f));
      const auto scaled = gramdim::verify_dimension(c.f * s);
      REQUIRE(scaled.computed.has_value());
      CHECK(*scaled.computed == *base.computed);
    }
  }
}

TEST_CASE("brute force sampling oracle") {
  CHECK(gramdim::brute_force_dimension(kSquareOfXSquaredPlusOne, 10000) == 1);
  CHECK(gramdim::brute_force_dimension(Polynomial::monomial(1, 4), 10000) == 0);
  CHECK(gramdim::brute_force_dimension(Polynomial({1, 0, 1}), 10000) == 0);
  CHECK(gramdim::brute_force_dimension(Polynomial({0, 0, 1, 0, 1}), 10000) == 0);

  for (const auto& c : gramdim::theorem_battery(17, 2)) {
    if (c.d > 3) continue;
    CAPTURE(gramdim::to_string(c.f));
    const auto report = gramdim::verify_dimension(c.f);
    REQUIRE(report.computed.has_value());
    CHECK(gramdim::brute_force_dimension(c.f, 10000) == *report.computed);
  }
}
