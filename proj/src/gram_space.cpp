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

#include "gramdim/gram_space.hpp"

#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "gramdim/errors.hpp"

namespace gramdim {

std::vector<double> gram_apply(const SymMatrix& q) {
  const int n = q.size();
  if (n == 0) return {};
  std::vector<double> c(static_cast<std::size_t>(2 * n - 1), 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) c[static_cast<std::size_t>(i + j)] += q(i, j);
  }
  return c;
}

SymMatrix GramAffineSpace::point(std::span<const double> t) const {
  if (t.size() != kernel.size()) throw InvalidInput("kernel coordinate count mismatch");
  SymMatrix q = q0;
  for (std::size_t k = 0; k < t.size(); ++k) q += kernel[k] * t[k];
  return q;
}

double GramAffineSpace::residual(const SymMatrix& q) const {
  const std::vector<double> c = gram_apply(q);
  if (c.size() != target.size()) throw InvalidInput("Gram matrix size does not match the polynomial");
  double err = 0;
  double scale = 0;
  for (std::size_t m = 0; m < c.size(); ++m) {
    err = std::max(err, std::abs(c[m] - target[m]));
    scale = std::max(scale, std::abs(target[m]));
  }
  return scale > 0 ? err / scale : err;
}

std::vector<double> GramAffineSpace::coordinates(const SymMatrix& q) const {
  const auto k = static_cast<Eigen::Index>(kernel.size());
  if (k == 0) return {};
  const Eigen::Index nn = static_cast<Eigen::Index>(n) * n;
  Eigen::MatrixXd basis(nn, k);
  for (Eigen::Index c = 0; c < k; ++c) {
    basis.col(c) = kernel[static_cast<std::size_t>(c)].dense().reshaped();
  }
  const Eigen::VectorXd rhs = (q - q0).dense().reshaped();
  const Eigen::VectorXd t = basis.colPivHouseholderQr().solve(rhs);
  return {t.data(), t.data() + t.size()};
}

GramAffineSpace build_gram_space(std::span<const double> coeffs) {
  std::size_t len = coeffs.size();
  while (len > 0 && coeffs[len - 1] == 0.0) --len;
  if (len == 0) throw InvalidInput("Gram space of the zero polynomial");
  if ((len - 1) % 2 != 0) throw InvalidInput("Gram space needs an even-degree polynomial");

  GramAffineSpace space;
  space.d = static_cast<int>((len - 1) / 2);
  space.n = space.d + 1;
  space.target.assign(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(len));
  space.q0 = SymMatrix(space.n);
  for (int m = 0; m <= 2 * space.d; ++m) {
    const double c = space.target[static_cast<std::size_t>(m)];
    if (m % 2 == 0) {
      space.q0.set(m / 2, m / 2, c);
    } else {
      space.q0.set(m / 2, m / 2 + 1, c / 2);
    }
  }

  const int d = space.d;
  for (int m = 0; m <= 2 * d; ++m) {
    const int first = std::max(0, m - d);
    const int last = m / 2;
    for (int i = first; i < last; ++i) {
      const int j = m - i;
      SymMatrix b(space.n);
      b.set(i, j, 1.0);
      if (i + 1 == j - 1) {
        b.set(i + 1, i + 1, -2.0);
      } else {
        b.set(i + 1, j - 1, -1.0);
      }
      space.kernel.push_back(std::move(b));
    }
  }
  return space;
}

GramAffineSpace build_gram_space(const Polynomial& f) {
  if (f.is_zero()) throw InvalidInput("Gram space of the zero polynomial");
  if (f.degree() % 2 != 0) throw InvalidInput("Gram space needs an even-degree polynomial");
  const std::vector<double> c = f.to_doubles();
  return build_gram_space(std::span<const double>(c));
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("binomial overflow");
  }
  return static_cast<std::uint64_t>(result);
}

std::uint64_t gram_space_dimension(int d) {
  return d < 0 ? 0 : binomial(static_cast<std::uint64_t>(d), 2);
}

std::uint64_t expected_full_dimension(int n, int d) {
  if (n < 1 || d < 0) throw InvalidInput("expected_full_dimension needs n >= 1 and d >= 0");
  const auto nn = static_cast<std::uint64_t>(n);
  const auto dd = static_cast<std::uint64_t>(d);
  const std::uint64_t monomials = binomial(dd + nn, nn);
  return binomial(monomials + 1, 2) - binomial(2 * dd + nn, nn);
}

}  // namespace gramdim
