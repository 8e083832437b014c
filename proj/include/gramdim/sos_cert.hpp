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

#ifndef GRAMDIM_SOS_CERT_HPP
#define GRAMDIM_SOS_CERT_HPP

#include <complex>
#include <vector>

#include "gramdim/polynomial.hpp"
#include "gramdim/sym_matrix.hpp"

namespace gramdim {

struct ComplexRoot {
  std::complex<double> value;
  int multiplicity;
};

// All roots of f with multiplicities taken from the exact square-free
// decomposition. Real roots carry an exactly zero imaginary part; non-real
// roots are listed as adjacent (z, conj(z)) pairs with Im z > 0.
// Throws InvalidInput on the zero polynomial, NumericalFailure when the
// eigenvalue solve fails or the numeric roots do not pair up.
std::vector<ComplexRoot> complex_roots(const Polynomial& f);

/// Two-squares certificate f = p^2 + q^2 and its rank <= 2 Gram point.
struct SosCertificate {
  std::vector<double> p;  // ascending, length d + 1
  std::vector<double> q;  // ascending, length d + 1
  SymMatrix gram_point;   // v_p v_p^t + v_q v_q^t
  double residual = 0;    // max |p^2 + q^2 - f| / max |f|
};

inline constexpr double kSosResidualLimit = 1e-8;

// h = sqrt(lc) * prod (x - z_j) * prod (x - r_i)^(e_i) with one root chosen
// from every conjugate pair (the one in the upper half plane), p = Re h,
// q = Im h. Throws NotNonnegative, or NumericalFailure when the residual
// exceeds kSosResidualLimit.
SosCertificate two_squares(const Polynomial& f);

// Same construction where the non-real factor of h is assembled copy by
// copy: flips[j] selects conj(z) instead of z for the j-th root copy (copies
// enumerate upper-half-plane roots with multiplicity, in complex_roots
// order). There are deg(f)/2 - e copies; a shorter flips vector is padded
// with false.
SosCertificate two_squares(const Polynomial& f, const std::vector<bool>& flips);

// Number of non-real root copies available to flip, deg(f)/2 - e.
int conjugate_copy_count(const Polynomial& f);

// Certificates for several conjugate choices: every choice with the first
// copy fixed when that is at most max_variants, otherwise the default
// choice plus each single flip. The first entry is two_squares(f).
std::vector<SosCertificate> two_squares_variants(const Polynomial& f, int max_variants = 64);

}  // namespace gramdim

#endif  // GRAMDIM_SOS_CERT_HPP
