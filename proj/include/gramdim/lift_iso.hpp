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

#ifndef GRAMDIM_LIFT_ISO_HPP
#define GRAMDIM_LIFT_ISO_HPP

#include <Eigen/Core>

#include <cstdint>
#include <optional>
#include <vector>

#include "gramdim/polynomial.hpp"
#include "gramdim/rational.hpp"
#include "gramdim/sym_matrix.hpp"

namespace gramdim {

/// Coefficient action of multiplication by (a x + b) on polynomials of
/// degree <= d: A = a R + b S, (d+2) x (d+1).
struct LiftMap {
  double a = 0;
  double b = 0;
  int d = 0;
  Eigen::MatrixXd matrix;

  // Throws InvalidInput when a = b = 0.
  LiftMap(int source_half_degree, double a, double b);

  // Coefficients of (a x + b) q for q of degree <= d.
  Eigen::VectorXd apply(const Eigen::VectorXd& q) const;
};

struct ShiftMatrices {
  Eigen::MatrixXd r;  // R(i+1, i) = 1
  Eigen::MatrixXd s;  // S(i, i) = 1
};

ShiftMatrices shift_matrices(int d);

// A M A^t. Maps Gram(f) into Gram((a x + b)^2 f), preserves PSD and rank.
// Throws InvalidInput when a = b = 0.
SymMatrix lift_gram(const SymMatrix& m, double a, double b);

struct IsomorphismReport {
  Polynomial lifted;            // (a x + b)^2 f
  SymMatrix lifted_point;       // lift of the source max-rank witness
  int samples = 0;
  double coefficient_error = 0;  // worst relative error over the samples
  bool coefficient_identity = false;
  bool psd_preserved = false;
  int induced_rank = 0;          // exact rank of M -> A M A^t on S_{d+1}
  int expected_rank = 0;         // binom(d + 2, 2)
  bool injective = false;
  std::optional<int> source_dim;
  std::optional<int> target_dim;
  bool dimension_transport = false;

  bool ok() const {
    return coefficient_identity && psd_preserved && injective && dimension_transport;
  }
};

inline constexpr double kCoefficientIdentityTol = 1e-12;

// Finite checks of the lifting isomorphism: coefficient identity for random
// feasible Q, PSD preservation, exact injectivity of the induced linear map,
// and equal computed dimensions of both spectrahedra. Throws NotNonnegative
// and InvalidInput (a = b = 0).
IsomorphismReport verify_isomorphism(const Polynomial& f, const Rational& a, const Rational& b,
                                     std::uint64_t seed = 7, int samples = 8);

// Exact rank of the linear map vec(M) -> vec(A M A^t) on symmetric
// (d+1) x (d+1) matrices, for rational a, b.
int induced_map_rank(int d, const Rational& a, const Rational& b);

}  // namespace gramdim

#endif  // GRAMDIM_LIFT_ISO_HPP
