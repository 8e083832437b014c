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

#ifndef GRAMDIM_POLYNOMIAL_HPP
#define GRAMDIM_POLYNOMIAL_HPP

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "gramdim/rational.hpp"

namespace gramdim {

/// Univariate polynomial with exact rational coefficients in ascending
/// degree order: coeffs()[m] multiplies x^m.
///
/// The representation is always normalized: the trailing coefficient is
/// nonzero, and the zero polynomial is the empty sequence with degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  // c * x^k
  static Polynomial monomial(const Rational& c, int k);
  // x - r
  static Polynomial linear_factor(const Rational& r);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const Rational& leading() const;
  // Coefficient of x^m; zero past the degree.
  Rational coeff(int m) const;

  Polynomial monic() const;
  Rational evaluate(const Rational& x) const;
  long double evaluate(long double x) const;
  std::complex<long double> evaluate(std::complex<long double> z) const;
  std::vector<double> to_doubles() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(Polynomial lhs, const Polynomial& rhs) { return lhs *= rhs; }
  friend Polynomial operator*(Polynomial lhs, const Rational& s) { return lhs *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial rhs) { return rhs *= s; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

// Strips trailing zeros. An all-zero (or empty) input is the zero polynomial.
Polynomial normalize(std::span<const Rational> raw_coeffs);

Polynomial derivative(const Polynomial& p);
Polynomial power(const Polynomial& p, int exponent);

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

// Euclidean division; throws InvalidInput when the divisor is zero.
DivMod divide(const Polynomial& dividend, const Polynomial& divisor);

// Throws InvalidInput unless the remainder is exactly zero.
Polynomial divide_exact(const Polynomial& dividend, const Polynomial& divisor);

// Monic gcd. gcd(0, 0) is the zero polynomial.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

struct SquareFreeFactor {
  Polynomial factor;  // monic, squarefree, nonconstant
  int multiplicity;
};

// Yun's algorithm: f = lc(f) * prod factor^multiplicity with pairwise coprime
// factors, ascending multiplicity. Only nontrivial factors are listed.
std::vector<SquareFreeFactor> square_free_decomposition(const Polynomial& f);

// Sturm chain f, f', -rem(f, f'), ... (exact).
std::vector<Polynomial> sturm_sequence(const Polynomial& f);

// Number of distinct real roots of a squarefree polynomial. Throws
// InvalidInput on the zero polynomial or when gcd(f, f') != 1.
int count_real_roots(const Polynomial& f);

// Exact decision of f(x) >= 0 for all real x. False for the zero polynomial.
bool is_nonnegative(const Polynomial& f);

struct RealRoot {
  double root;
  int half_multiplicity;  // e_i; the multiplicity in f is 2 * e_i
};

struct DeflationReport {
  std::vector<RealRoot> real_roots;  // ascending
  int excess = 0;                    // sum of half multiplicities
  std::vector<double> positive_part; // f / prod (x - r_i)^(2 e_i), ascending
  std::vector<SquareFreeFactor> squarefree_factors;
};

// Real-root multiplicity excess e of a nonnegative polynomial. e is exact
// (Sturm counts on the squarefree factors); root values and the deflated
// positive part are floating point. Throws NotNonnegative.
DeflationReport real_root_excess(const Polynomial& f);

// All roots of a squarefree polynomial, from the eigenvalues of the balanced
// companion matrix polished by Newton steps on the exact coefficients.
// Throws NumericalFailure if the eigenvalue iteration does not converge.
std::vector<std::complex<double>> simple_roots(const Polynomial& squarefree);

// Real roots of a squarefree polynomial, ascending. The count is the exact
// Sturm count; only the values are approximate.
std::vector<double> real_roots(const Polynomial& squarefree);

// Expression form, e.g. "x^4 - 2*x^2 + 1" or "1/2*x + 3". Zero renders "0".
std::string to_string(const Polynomial& p);

}  // namespace gramdim

#endif  // GRAMDIM_POLYNOMIAL_HPP
