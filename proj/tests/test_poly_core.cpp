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

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <random>

#include "gramdim/errors.hpp"
#include "gramdim/polynomial.hpp"

using gramdim::Polynomial;
using gramdim::Rational;

namespace {

Polynomial lin(const Rational& r) { return Polynomial::linear_factor(r); }

Polynomial random_poly(std::mt19937_64& rng, int degree, int bound) {
  std::uniform_int_distribution<int> coeff(-bound, bound);
  std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
  for (auto& v : c) v = coeff(rng);
  while (c.back() == 0) c.back() = coeff(rng);
  return Polynomial(std::move(c));
}

// Real eigenvalues of the plain (unbalanced) companion matrix.
int companion_real_count(const Polynomial& f) {
  const std::vector<double> c = f.monic().to_doubles();
  const int n = f.degree();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  m.diagonal(-1).setOnes();
  for (int i = 0; i < n; ++i) m(i, n - 1) = -c[static_cast<std::size_t>(i)];
  Eigen::EigenSolver<Eigen::MatrixXd> es(m, false);
  int count = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (std::abs(es.eigenvalues()(i).imag()) < 1e-7) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("normalize strips trailing zeros") {
  std::vector<Rational> raw{1, 0, 2, 0, 1, 0};
  const Polynomial p = gramdim::normalize(raw);
  CHECK(p.degree() == 4);
  CHECK(p == Polynomial({1, 0, 2, 0, 1}));

  std::vector<Rational> zero{0};
  CHECK(gramdim::normalize(zero).is_zero());
  CHECK(gramdim::normalize(zero).degree() == -1);

  std::vector<Rational> already{4, 0, 5, 0, 1};
  CHECK(gramdim::normalize(already).coeffs() == already);
}

TEST_CASE("exact arithmetic") {
  const Polynomial f({1, 0, 2, 0, 1});  // (x^2 + 1)^2
  SUBCASE("gcd with derivative") {
    // f' = 4x(x^2 + 1)
    CHECK(gramdim::derivative(f) == Polynomial({0, 4, 0, 4}));
    CHECK(gramdim::gcd(f, gramdim::derivative(f)) == Polynomial({1, 0, 1}));
  }
  SUBCASE("multiply") { CHECK(Polynomial({1, 0, 1}) * Polynomial({4, 0, 1}) == Polynomial({4, 0, 5, 0, 1})); }
  SUBCASE("derivative of x^2") { CHECK(gramdim::derivative(Polynomial({0, 0, 1})) == Polynomial({0, 2})); }
  SUBCASE("divide_exact") {
    CHECK(gramdim::divide_exact(f, Polynomial({1, 0, 1})) == Polynomial({1, 0, 1}));
    CHECK_THROWS_AS(gramdim::divide_exact(f, Polynomial({0, 1})), gramdim::InvalidInput);
    CHECK_THROWS_AS(gramdim::divide(f, Polynomial{}), gramdim::InvalidInput);
  }
  SUBCASE("gcd is monic") {
    const Polynomial a = Polynomial({3}) * lin(2) * lin(Rational(1, 3));
    const Polynomial b = Polynomial({-5}) * lin(2) * lin(7);
    CHECK(gramdim::gcd(a, b) == lin(2));
    CHECK(gramdim::gcd(Polynomial{}, Polynomial{}).is_zero());
  }
  SUBCASE("rational evaluation") {
    CHECK(f.evaluate(Rational(1, 2)) == Rational(25, 16));
  }
}

TEST_CASE("square-free decomposition") {
  SUBCASE("(x^2+1)^2") {
    const auto sf = gramdim::square_free_decomposition(Polynomial({1, 0, 2, 0, 1}));
    REQUIRE(sf.size() == 1);
    CHECK(sf[0].factor == Polynomial({1, 0, 1}));
    CHECK(sf[0].multiplicity == 2);
  }
  SUBCASE("squarefree input") {
    const auto sf = gramdim::square_free_decomposition(Polynomial({4, 0, 5, 0, 1}));
    REQUIRE(sf.size() == 1);
    CHECK(sf[0].factor == Polynomial({4, 0, 5, 0, 1}));
    CHECK(sf[0].multiplicity == 1);
  }
  SUBCASE("x^6") {
    const auto sf = gramdim::square_free_decomposition(Polynomial::monomial(1, 6));
    REQUIRE(sf.size() == 1);
    CHECK(sf[0].factor == Polynomial({0, 1}));
    CHECK(sf[0].multiplicity == 6);
  }
  SUBCASE("zero polynomial") {
    CHECK_THROWS_AS(gramdim::square_free_decomposition(Polynomial{}), gramdim::InvalidInput);
  }
  SUBCASE("reconstruction property") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> mult(1, 4);
    for (int trial = 0; trial < 40; ++trial) {
      Polynomial f = Polynomial::constant(Rational(-3, 7));
      for (int j = 0; j < 3; ++j) f *= gramdim::power(random_poly(rng, 1 + trial % 3, 3), mult(rng));
      const auto sf = gramdim::square_free_decomposition(f);
      Polynomial rebuilt = Polynomial::constant(f.leading());
      for (std::size_t i = 0; i < sf.size(); ++i) {
        CHECK(sf[i].factor.leading() == 1);
        CHECK(gramdim::gcd(sf[i].factor, gramdim::derivative(sf[i].factor)).degree() == 0);
        for (std::size_t j = i + 1; j < sf.size(); ++j) CHECK(gramdim::gcd(sf[i].factor, sf[j].factor).degree() == 0);
        rebuilt *= gramdim::power(sf[i].factor, sf[i].multiplicity);
      }
      CHECK(rebuilt == f);
    }
  }
}

TEST_CASE("count_real_roots") {
  CHECK(gramdim::count_real_roots(Polynomial({1, 0, 1})) == 0);
  CHECK(gramdim::count_real_roots(Polynomial({-2, 0, 1})) == 2);
  CHECK(gramdim::count_real_roots(Polynomial({0, -1, 0, 1})) == 3);
  CHECK(gramdim::count_real_roots(Polynomial({5})) == 0);
  CHECK_THROWS_AS(gramdim::count_real_roots(Polynomial({1, 0, 2, 0, 1})), gramdim::InvalidInput);
  CHECK_THROWS_AS(gramdim::count_real_roots(Polynomial{}), gramdim::InvalidInput);

  SUBCASE("agrees with companion eigenvalues") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> root(-6, 6);
    std::uniform_int_distribution<int> count(0, 4);
    for (int trial = 0; trial < 60; ++trial) {
      // Well separated roots: distinct integers and quadratics with
      // discriminant <= -4.
      std::vector<int> roots;
      const int n_real = count(rng);
      while (static_cast<int>(roots.size()) < n_real) {
        const int r = root(rng);
        if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
      }
      Polynomial f = Polynomial::constant(1);
      for (int r : roots) f *= lin(r);
      const int n_quad = std::min(count(rng), (10 - n_real) / 2);
      for (int q = 0; q < n_quad; ++q) f *= Polynomial({1 + 2 * q + trial % 3, root(rng) % 2, 1});
      if (f.degree() == 0) continue;
      REQUIRE(gramdim::gcd(f, gramdim::derivative(f)).degree() == 0);
      CHECK(gramdim::count_real_roots(f) == n_real);
      CHECK(companion_real_count(f) == n_real);
    }
  }
}

TEST_CASE("is_nonnegative") {
  CHECK(gramdim::is_nonnegative(Polynomial({4, 0, 5, 0, 1})));
  CHECK_FALSE(gramdim::is_nonnegative(Polynomial({0, 0, 0, 1})));
  CHECK(gramdim::is_nonnegative(Polynomial({4, 0, -4, 0, 1})));  // (x^2 - 2)^2
  CHECK_FALSE(gramdim::is_nonnegative(Polynomial({-1, 0, 1})));
  CHECK_FALSE(gramdim::is_nonnegative(Polynomial({1, 0, -1})));  // negative leading coefficient
  CHECK_FALSE(gramdim::is_nonnegative(Polynomial{}));
  CHECK(gramdim::is_nonnegative(Polynomial({3})));
  CHECK_FALSE(gramdim::is_nonnegative(Polynomial({-3})));

  SUBCASE("agrees with dense sign sampling") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> pick(0, 2);
    for (int trial = 0; trial < 80; ++trial) {
      Polynomial f;
      switch (pick(rng)) {
        case 0: {  // square times a shifted square: nonnegative
          const Polynomial a = random_poly(rng, 2, 3);
          f = a * a * gramdim::power(lin(trial % 5 - 2), 2) + Polynomial({trial % 2});
          break;
        }
        case 1: {  // generic, often negative somewhere
          f = random_poly(rng, 2 * (1 + trial % 3), 4);
          break;
        }
        default: {  // odd-multiplicity real root: negative somewhere
          const Polynomial a = random_poly(rng, 1, 3);
          f = a * a * lin(1) * lin(-1) + Polynomial({0});
          break;
        }
      }
      if (f.is_zero()) continue;
      const std::vector<double> c = f.to_doubles();
      double max_ratio = 0;
      for (double v : c) max_ratio = std::max(max_ratio, std::abs(v / c.back()));
      const double radius = 1 + max_ratio;
      bool negative_seen = false;
      for (int i = 0; i <= 10000 && !negative_seen; ++i) {
        const long double x = -radius + 2 * radius * i / 10000.0L;
        if (f.evaluate(x) < -1e-9L * std::abs(c.back())) negative_seen = true;
      }
      const bool beyond = f.degree() % 2 != 0 || c.back() < 0;
      CHECK(gramdim::is_nonnegative(f) == !(negative_seen || beyond));
    }
  }
}

TEST_CASE("real_root_excess") {
  SUBCASE("(x^2+1)^2 has no real roots") {
    const auto rep = gramdim::real_root_excess(Polynomial({1, 0, 2, 0, 1}));
    CHECK(rep.excess == 0);
    CHECK(rep.real_roots.empty());
    CHECK(rep.positive_part.size() == 5);
  }
  SUBCASE("x^4") {
    const auto rep = gramdim::real_root_excess(Polynomial::monomial(1, 4));
    CHECK(rep.excess == 2);
    REQUIRE(rep.real_roots.size() == 1);
    CHECK(rep.real_roots[0].root == doctest::Approx(0.0));
    CHECK(rep.real_roots[0].half_multiplicity == 2);
    REQUIRE(rep.positive_part.size() == 1);
    CHECK(rep.positive_part[0] == doctest::Approx(1.0));
  }
  SUBCASE("(x-1)^2 (x^2+1)") {
    const Polynomial f({1, -2, 2, -2, 1});
    CHECK(f == gramdim::power(lin(1), 2) * Polynomial({1, 0, 1}));
    const auto rep = gramdim::real_root_excess(f);
    CHECK(rep.excess == 1);
    REQUIRE(rep.real_roots.size() == 1);
    CHECK(rep.real_roots[0].root == doctest::Approx(1.0));
    REQUIRE(rep.positive_part.size() == 3);
    CHECK(rep.positive_part[0] == doctest::Approx(1.0));
    CHECK(rep.positive_part[1] == doctest::Approx(0.0));
    CHECK(rep.positive_part[2] == doctest::Approx(1.0));
  }
  SUBCASE("irrational roots are counted exactly") {
    const auto rep = gramdim::real_root_excess(gramdim::power(Polynomial({-2, 0, 1}), 2));
    CHECK(rep.excess == 2);
    REQUIRE(rep.real_roots.size() == 2);
    CHECK(rep.real_roots[0].root == doctest::Approx(-std::sqrt(2.0)));
    CHECK(rep.real_roots[1].root == doctest::Approx(std::sqrt(2.0)));
  }
  SUBCASE("negative polynomials are rejected") {
    CHECK_THROWS_AS(gramdim::real_root_excess(Polynomial({0, 0, 0, 1})), gramdim::NotNonnegative);
    CHECK_THROWS_AS(gramdim::real_root_excess(Polynomial({0, 0, 1}) * lin(3)), gramdim::NotNonnegative);
  }
  SUBCASE("random deflation products recover e") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> num(-7, 7);
    std::uniform_int_distribution<int> den(1, 4);
    std::uniform_int_distribution<int> half(1, 2);
    for (int trial = 0; trial < 40; ++trial) {
      Polynomial f = Polynomial::constant(1);
      int e = 0;
      std::vector<Rational> used;
      const int n_roots = trial % 4;
      while (static_cast<int>(used.size()) < n_roots) {
        Rational r(num(rng), den(rng));
        r.canonicalize();
        if (std::find(used.begin(), used.end(), r) != used.end()) continue;
        used.push_back(r);
        const int ei = half(rng);
        e += ei;
        f *= gramdim::power(lin(r), 2 * ei);
      }
      const int g_half = std::max(0, std::min(3, (16 - f.degree()) / 2));
      const Polynomial a = random_poly(rng, g_half, 3);
      const Polynomial b = g_half > 0 ? random_poly(rng, g_half - 1, 3) : Polynomial{};
      f *= a * a + b * b + Polynomial({Rational(1, 2)});
      REQUIRE(f.degree() <= 16);
      const auto rep = gramdim::real_root_excess(f);
      CHECK(rep.excess == e);
      CHECK(static_cast<int>(rep.positive_part.size()) - 1 == f.degree() - 2 * e);
      int sum = 0;
      for (const auto& rr : rep.real_roots) sum += rr.half_multiplicity;
      CHECK(sum == rep.excess);
    }
  }
}

TEST_CASE("simple roots of a squarefree polynomial") {
  const auto roots = gramdim::simple_roots(Polynomial({4, 0, 5, 0, 1}));
  REQUIRE(roots.size() == 4);
  for (const auto& z : roots) {
    CHECK(std::abs(z.real()) < 1e-12);
    const double im = std::abs(z.imag());
    CHECK((std::abs(im - 1) < 1e-12 || std::abs(im - 2) < 1e-12));
  }
  const auto real = gramdim::real_roots(Polynomial({0, -1, 0, 1}));
  REQUIRE(real.size() == 3);
  CHECK(real[0] == doctest::Approx(-1.0));
  CHECK(real[1] == doctest::Approx(0.0));
  CHECK(real[2] == doctest::Approx(1.0));
}

TEST_CASE("rational parsing and rendering") {
  CHECK(gramdim::parse_rational("7") == 7);
  CHECK(gramdim::parse_rational("-3/4") == Rational(-3, 4));
  CHECK(gramdim::parse_rational("2.125") == Rational(17, 8));
  CHECK(gramdim::parse_rational(".5") == Rational(1, 2));
  CHECK(gramdim::parse_rational("1e-3") == Rational(1, 1000));
  CHECK(gramdim::parse_rational("0.1") == Rational(1, 10));
  CHECK(gramdim::parse_rational("0.125") == Rational(1, 8));
  CHECK(gramdim::parse_rational("010") == 10);
  CHECK(gramdim::parse_rational("08/09") == Rational(8, 9));
  CHECK_THROWS_AS(gramdim::parse_rational("1/0"), gramdim::InvalidInput);
  CHECK_THROWS_AS(gramdim::parse_rational("abc"), gramdim::InvalidInput);
  CHECK_THROWS_AS(gramdim::parse_rational(""), gramdim::InvalidInput);

  CHECK(gramdim::to_string(Polynomial({1, 0, -2, 0, 1})) == "x^4 - 2*x^2 + 1");
  CHECK(gramdim::to_string(Polynomial({Rational(3), Rational(1, 2)})) == "1/2*x + 3");
  CHECK(gramdim::to_string(Polynomial({0, -1})) == "-x");
  CHECK(gramdim::to_string(Polynomial{}) == "0");
}
