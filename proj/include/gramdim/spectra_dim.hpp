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

#ifndef GRAMDIM_SPECTRA_DIM_HPP
#define GRAMDIM_SPECTRA_DIM_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "gramdim/gram_space.hpp"
#include "gramdim/polynomial.hpp"
#include "gramdim/sym_matrix.hpp"

namespace gramdim {

inline constexpr double kDefaultRankTol = 1e-8;

// A point is feasible when lambda_min >= -kFeasibilityTol * trace and its
// Gram residual is at most kGramResidualTol.
inline constexpr double kFeasibilityTol = 1e-9;
inline constexpr double kGramResidualTol = 1e-8;

struct DimensionOptions {
  double rank_tol = kDefaultRankTol;
  int max_sweeps = 50;
  int stable_sweeps = 2;
};

/// Closed interval [t_min, t_max] of t with Q + tD PSD; either end may be
/// infinite.
struct PsdInterval {
  double t_min;
  double t_max;
  double width() const { return t_max - t_min; }
};

// Bisection on the smallest eigenvalue, bracketed by a Gershgorin bound on
// lambda_max(Q). The boundary allows lambda_min to fall 1e-12 * scale below
// its value at t = 0 (or below zero, whichever is lower). Throws
// InvalidInput when Q is not PSD within kFeasibilityTol.
PsdInterval psd_line_search(const SymMatrix& q, const SymMatrix& direction);

struct SweepRecord {
  int rank;
  double min_eigenvalue_over_trace;
  double gram_residual;
};

struct MaxRankResult {
  SymMatrix point;
  int rank = 0;
  bool converged = false;
  std::vector<SweepRecord> sweeps;  // one record per iterate, start included
};

// Line-search-and-average relative-interior finder. Each sweep searches
// along every direction, then replaces the current point by the average of
// itself and the midpoints of all nondegenerate segments. Stops once the
// rank has been unchanged for options.stable_sweeps sweeps. Throws
// InvalidInput on an infeasible start.
MaxRankResult max_rank_point(const GramAffineSpace& space, const SymMatrix& start,
                             const DimensionOptions& options = {});

// Multi-start variant: begins at the barycenter of the feasible starts and
// adds the directions from the barycenter to each start to the kernel
// directions, so the search also moves inside an affine hull that is not
// aligned with the kernel basis.
MaxRankResult max_rank_point(const GramAffineSpace& space, std::span<const SymMatrix> starts,
                             const DimensionOptions& options = {});

// Dimension of { t : range(sum t_k B_k) is contained in range(witness) },
// i.e. of the face of the spectrahedron whose relative interior holds the
// witness. Throws InvalidInput when the witness is not feasible.
int face_dimension(const GramAffineSpace& space, const SymMatrix& witness,
                   double rank_tol = kDefaultRankTol);

enum class DimensionStatus { kDetermined, kUndetermined };

std::string_view to_string(DimensionStatus status);

struct DimensionReport {
  int d = 0;
  int e = 0;
  std::uint64_t predicted = 0;        // binom(d - e, 2)
  std::optional<int> computed;         // empty when undetermined
  SymMatrix max_rank_witness;
  int witness_rank = 0;
  bool agreement = false;
  DimensionStatus status = DimensionStatus::kUndetermined;
  int sweeps = 0;
  double sos_residual = 0;
  DeflationReport deflation;
};

// real_root_excess -> build_gram_space -> two_squares_variants ->
// max_rank_point -> face_dimension. Throws InvalidInput on the zero
// polynomial, NotNonnegative, NumericalFailure from the certificate.
DimensionReport verify_dimension(const Polynomial& f, const DimensionOptions& options = {});

// Sampling oracle, independent of max_rank_point and face_dimension.
//
// Every Gram matrix Q in the spectrahedron satisfies Q w = 0 for the
// derivative vectors w = X^(j)(r), j < e_i, at each real root r_i, since
// each square in an SOS representation vanishes to order e_i there. Points
// are drawn uniformly from an axis-aligned box inside that affine subspace,
// centered at the barycenter of the two-squares Gram points and sized from
// line searches (doubled while feasible samples crowd the boundary). The
// result is the rank of the centered feasible samples; 0 when at most one
// feasible point is seen. Throws NumericalFailure when the root constraints
// are inconsistent or the certificate point is infeasible.
int brute_force_dimension(const Polynomial& f, int samples, std::uint64_t seed = 20240601,
                          double rank_tol = kDefaultRankTol);

}  // namespace gramdim

#endif  // GRAMDIM_SPECTRA_DIM_HPP
