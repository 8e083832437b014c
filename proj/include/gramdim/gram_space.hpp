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

#ifndef GRAMDIM_GRAM_SPACE_HPP
#define GRAMDIM_GRAM_SPACE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "gramdim/polynomial.hpp"
#include "gramdim/sym_matrix.hpp"

namespace gramdim {

// Coefficients of X^t Q X for X = (1, x, ..., x^(n-1)), ascending, length
// 2n - 1: c_m is the sum of the anti-diagonal i + j = m.
std::vector<double> gram_apply(const SymMatrix& q);

/// Affine space of Gram matrices of a polynomial of degree 2d:
/// { q0 + sum_k t_k kernel[k] }.
struct GramAffineSpace {
  int d = 0;
  int n = 1;  // matrix size d + 1
  std::vector<double> target;  // coefficients of f, length 2d + 1
  SymMatrix q0;
  std::vector<SymMatrix> kernel;

  SymMatrix point(std::span<const double> t) const;
  // max |gram_apply(q) - target| / max |target|
  double residual(const SymMatrix& q) const;
  // Least-squares coordinates of q - q0 in the kernel basis.
  std::vector<double> coordinates(const SymMatrix& q) const;
};

// Throws InvalidInput on the zero polynomial or odd degree.
GramAffineSpace build_gram_space(const Polynomial& f);
GramAffineSpace build_gram_space(std::span<const double> coeffs);

// Binomial coefficient; throws std::overflow_error past 64 bits.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// binom(d, 2): dimension of the Gram fiber of a degree-2d univariate
// polynomial, and of its spectrahedron when f is strictly positive.
std::uint64_t gram_space_dimension(int d);

// binom(binom(d+n, n) + 1, 2) - binom(2d + n, n): dimension of the Gram
// spectrahedron of an n-variate degree-2d polynomial interior to the SOS cone.
std::uint64_t expected_full_dimension(int n, int d);

}  // namespace gramdim

#endif  // GRAMDIM_GRAM_SPACE_HPP
