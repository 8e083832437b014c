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

#include "gramdim/polynomial.hpp"

#include <Eigen/Core>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "gramdim/errors.hpp"

namespace gramdim {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, int k) {
  std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
  v.back() = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::linear_factor(const Rational& r) { return Polynomial({-r, 1}); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& Polynomial::leading() const {
  if (coeffs_.empty()) throw InvalidInput("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational Polynomial::coeff(int m) const {
  if (m < 0 || m > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(m)];
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  Polynomial p = *this;
  const Rational lc = leading();
  for (auto& c : p.coeffs_) c /= lc;
  return p;
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

long double Polynomial::evaluate(long double x) const {
  long double acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + static_cast<long double>(it->get_d());
  }
  return acc;
}

std::complex<long double> Polynomial::evaluate(std::complex<long double> z) const {
  std::complex<long double> acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * z + static_cast<long double>(it->get_d());
  }
  return acc;
}

std::vector<double> Polynomial::to_doubles() const {
  std::vector<double> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.get_d());
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) { return *this += -rhs; }

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

Polynomial normalize(std::span<const Rational> raw_coeffs) {
  return Polynomial(std::vector<Rational>(raw_coeffs.begin(), raw_coeffs.end()));
}

Polynomial derivative(const Polynomial& p) {
  if (p.degree() <= 0) return {};
  std::vector<Rational> out(static_cast<std::size_t>(p.degree()));
  for (int m = 1; m <= p.degree(); ++m) out[static_cast<std::size_t>(m - 1)] = p.coeffs()[m] * m;
  return Polynomial(std::move(out));
}

Polynomial power(const Polynomial& p, int exponent) {
  Polynomial result = Polynomial::constant(1);
  Polynomial base = p;
  for (int k = exponent; k > 0; k >>= 1) {
    if (k & 1) result *= base;
    if (k > 1) base *= base;
  }
  return result;
}

DivMod divide(const Polynomial& dividend, const Polynomial& divisor) {
  if (divisor.is_zero()) throw InvalidInput("division by the zero polynomial");
  const int dd = divisor.degree();
  std::vector<Rational> rem = dividend.coeffs();
  if (dividend.degree() < dd) return {Polynomial{}, dividend};
  std::vector<Rational> quot(static_cast<std::size_t>(dividend.degree() - dd + 1));
  const Rational& lc = divisor.leading();
  for (int k = dividend.degree() - dd; k >= 0; --k) {
    Rational q = rem[static_cast<std::size_t>(k + dd)] / lc;
    quot[static_cast<std::size_t>(k)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= q * divisor.coeffs()[j];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial divide_exact(const Polynomial& dividend, const Polynomial& divisor) {
  auto [q, r] = divide(dividend, divisor);
  if (!r.is_zero()) {
    throw InvalidInput("divide_exact: " + to_string(divisor) + " does not divide " +
                       to_string(dividend));
  }
  return q;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a;
  Polynomial y = b;
  while (!y.is_zero()) {
    Polynomial r = divide(x, y).remainder;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

std::vector<SquareFreeFactor> square_free_decomposition(const Polynomial& f) {
  if (f.is_zero()) throw InvalidInput("square-free decomposition of the zero polynomial");
  std::vector<SquareFreeFactor> out;
  if (f.degree() == 0) return out;

  const Polynomial fm = f.monic();
  const Polynomial df = derivative(fm);
  const Polynomial a0 = gcd(fm, df);
  Polynomial b = divide_exact(fm, a0);
  Polynomial c = divide_exact(df, a0);
  Polynomial d = c - derivative(b);
  for (int k = 1; b.degree() > 0; ++k) {
    Polynomial a = gcd(b, d);
    if (a.degree() > 0) out.push_back({a, k});
    b = divide_exact(b, a);
    c = divide_exact(d, a);
    d = c - derivative(b);
  }
  return out;
}

std::vector<Polynomial> sturm_sequence(const Polynomial& f) {
  std::vector<Polynomial> seq;
  if (f.is_zero()) return seq;
  seq.push_back(f);
  Polynomial next = derivative(f);
  while (!next.is_zero()) {
    // Positive rescaling keeps signs and tames coefficient growth.
    Rational scale = abs(next.leading());
    seq.push_back(next * Rational(1 / scale));
    next = -divide(seq[seq.size() - 2], seq.back()).remainder;
  }
  return seq;
}

namespace {

int sign_changes(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

bool is_squarefree(const Polynomial& f) { return gcd(f, derivative(f)).degree() == 0; }

}  // namespace

int count_real_roots(const Polynomial& f) {
  if (f.is_zero()) throw InvalidInput("count_real_roots of the zero polynomial");
  if (f.degree() == 0) return 0;
  if (!is_squarefree(f)) throw InvalidInput("count_real_roots needs a squarefree polynomial");

  const auto seq = sturm_sequence(f);
  std::vector<int> at_pos;
  std::vector<int> at_neg;
  for (const auto& p : seq) {
    const int s = sgn(p.leading());
    at_pos.push_back(s);
    at_neg.push_back(p.degree() % 2 == 0 ? s : -s);
  }
  return sign_changes(at_neg) - sign_changes(at_pos);
}

bool is_nonnegative(const Polynomial& f) {
  if (f.is_zero() || f.degree() % 2 != 0 || sgn(f.leading()) < 0) return false;
  for (const auto& [factor, k] : square_free_decomposition(f)) {
    if (k % 2 == 1 && count_real_roots(factor) > 0) return false;
  }
  return true;
}

namespace {

// Parlett-Reinsch balancing of a companion matrix.
void balance(Eigen::MatrixXd& companion) {
  Eigen::MatrixXd offdiag = companion;
  offdiag.diagonal().setZero();
  const Eigen::Index n = companion.rows();
  constexpr double kGamma = 0.9;
  bool changed = true;
  while (changed) {
    changed = false;
    for (Eigen::Index i = 0; i < n; ++i) {
      const double row_norm = offdiag.row(i).lpNorm<1>();
      const double col_norm = offdiag.col(i).lpNorm<1>();
      if (row_norm == 0 || col_norm == 0) continue;
      int exponent = 0;
      std::frexp(row_norm / col_norm, &exponent);
      exponent /= 2;
      if (exponent == 0) continue;
      const double scaled = std::ldexp(col_norm, exponent) + std::ldexp(row_norm, -exponent);
      if (scaled < kGamma * (col_norm + row_norm)) {
        changed = true;
        offdiag.row(i) *= std::ldexp(1.0, -exponent);
        offdiag.col(i) *= std::ldexp(1.0, exponent);
      }
    }
  }
  offdiag.diagonal() = companion.diagonal();
  companion = offdiag;
}

using ComplexLD = std::complex<long double>;

ComplexLD newton_polish(const Polynomial& p, const Polynomial& dp, ComplexLD z) {
  long double residual = std::abs(p.evaluate(z));
  for (int iter = 0; iter < 16 && residual > 0; ++iter) {
    const ComplexLD slope = dp.evaluate(z);
    if (std::abs(slope) == 0) break;
    const ComplexLD candidate = z - p.evaluate(z) / slope;
    const long double r = std::abs(p.evaluate(candidate));
    if (!(r < residual)) break;
    z = candidate;
    residual = r;
  }
  return z;
}

}  // namespace

std::vector<std::complex<double>> simple_roots(const Polynomial& squarefree) {
  const int n = squarefree.degree();
  if (n <= 0) return {};
  const Polynomial p = squarefree.monic();
  if (n == 1) return {std::complex<double>(-p.coeffs()[0].get_d(), 0.0)};

  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  companion.diagonal(-1).setOnes();
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -p.coeffs()[static_cast<std::size_t>(i)].get_d();
  balance(companion);

  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw NumericalFailure("companion eigenvalue iteration did not converge");
  }
  const Polynomial dp = derivative(p);
  std::vector<std::complex<double>> roots;
  roots.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto ev = solver.eigenvalues()(i);
    const ComplexLD z = newton_polish(p, dp, ComplexLD(ev.real(), ev.imag()));
    roots.emplace_back(static_cast<double>(z.real()), static_cast<double>(z.imag()));
  }
  return roots;
}

std::vector<double> real_roots(const Polynomial& squarefree) {
  const int count = count_real_roots(squarefree);
  if (count == 0) return {};
  auto roots = simple_roots(squarefree);
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
    return std::abs(a.imag()) < std::abs(b.imag());
  });
  const Polynomial dp = derivative(squarefree);
  std::vector<double> out;
  for (int i = 0; i < count; ++i) {
    const ComplexLD z = newton_polish(squarefree, dp, ComplexLD(roots[static_cast<std::size_t>(i)].real(), 0));
    out.push_back(static_cast<double>(z.real()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

DeflationReport real_root_excess(const Polynomial& f) {
  if (!is_nonnegative(f)) {
    throw NotNonnegative("polynomial " + to_string(f) + " is not nonnegative on the real line");
  }
  DeflationReport report;
  report.squarefree_factors = square_free_decomposition(f);
  for (const auto& [factor, k] : report.squarefree_factors) {
    if (k % 2 != 0) continue;
    for (double r : real_roots(factor)) {
      report.real_roots.push_back({r, k / 2});
      report.excess += k / 2;
    }
  }
  std::sort(report.real_roots.begin(), report.real_roots.end(),
            [](const RealRoot& a, const RealRoot& b) { return a.root < b.root; });

  // Synthetic division by (x - r), 2 e_i times per root.
  std::vector<double> g = f.to_doubles();
  for (const auto& [r, e] : report.real_roots) {
    for (int rep = 0; rep < 2 * e; ++rep) {
      std::vector<double> q(g.size() - 1);
      double carry = 0;
      for (std::size_t i = g.size() - 1; i > 0; --i) {
        carry = g[i] + carry * r;
        q[i - 1] = carry;
      }
      g = std::move(q);
    }
  }
  report.positive_part = std::move(g);
  return report;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int m = p.degree(); m >= 0; --m) {
    const Rational& c = p.coeffs()[static_cast<std::size_t>(m)];
    if (c == 0) continue;
    const Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << '-';
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (m == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << '*';
    out << 'x';
    if (m > 1) out << '^' << m;
  }
  return out.str();
}

}  // namespace gramdim
