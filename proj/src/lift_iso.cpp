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

#include "gramdim/lift_iso.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "gramdim/errors.hpp"
#include "gramdim/gram_space.hpp"
#include "gramdim/sos_cert.hpp"
#include "gramdim/spectra_dim.hpp"

namespace gramdim {

ShiftMatrices shift_matrices(int d) {
  if (d < 0) throw InvalidInput("shift_matrices needs d >= 0");
  ShiftMatrices m{Eigen::MatrixXd::Zero(d + 2, d + 1), Eigen::MatrixXd::Zero(d + 2, d + 1)};
  for (int i = 0; i <= d; ++i) {
    m.r(i + 1, i) = 1;
    m.s(i, i) = 1;
  }
  return m;
}

LiftMap::LiftMap(int source_half_degree, double a_coeff, double b_coeff)
    : a(a_coeff), b(b_coeff), d(source_half_degree) {
  if (a == 0 && b == 0) throw InvalidInput("lift by (a x + b) needs (a, b) != (0, 0)");
  const ShiftMatrices shifts = shift_matrices(d);
  matrix = a * shifts.r + b * shifts.s;
}

Eigen::VectorXd LiftMap::apply(const Eigen::VectorXd& q) const { return matrix * q; }

SymMatrix lift_gram(const SymMatrix& m, double a, double b) {
  const LiftMap lift(m.size() - 1, a, b);
  return SymMatrix(lift.matrix * m.dense() * lift.matrix.transpose());
}

int induced_map_rank(int d, const Rational& a, const Rational& b) {
  const int n = d + 1;
  auto entry = [&](int row, int col) -> Rational {
    if (row == col) return b;
    if (row == col + 1) return a;
    return 0;
  };
  std::vector<std::pair<int, int>> src;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) src.emplace_back(i, j);
  }
  std::vector<std::pair<int, int>> dst;
  for (int p = 0; p <= n; ++p) {
    for (int q = p; q <= n; ++q) dst.emplace_back(p, q);
  }
  // Column for E_ij (+ E_ji): A E A^t has (p, q) entry A_pi A_qj + A_pj A_qi.
  std::vector<std::vector<Rational>> rows(dst.size(), std::vector<Rational>(src.size()));
  for (std::size_t c = 0; c < src.size(); ++c) {
    const auto [i, j] = src[c];
    for (std::size_t r = 0; r < dst.size(); ++r) {
      const auto [p, q] = dst[r];
      Rational v = entry(p, i) * entry(q, j);
      if (i != j) v += entry(p, j) * entry(q, i);
      rows[r][c] = v;
    }
  }

  int rank = 0;
  for (std::size_t col = 0; col < src.size() && static_cast<std::size_t>(rank) < rows.size(); ++col) {
    auto pivot = std::find_if(rows.begin() + rank, rows.end(), [&](const auto& row) { return row[col] != 0; });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + rank, pivot);
    const auto& prow = rows[static_cast<std::size_t>(rank)];
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      const Rational factor = rows[r][col] / prow[col];
      for (std::size_t c = col; c < src.size(); ++c) rows[r][c] -= factor * prow[c];
    }
    ++rank;
  }
  return rank;
}

IsomorphismReport verify_isomorphism(const Polynomial& f, const Rational& a, const Rational& b,
                                     std::uint64_t seed, int samples) {
  if (a == 0 && b == 0) throw InvalidInput("lift by (a x + b) needs (a, b) != (0, 0)");
  const DimensionReport source = verify_dimension(f);
  const Polynomial factor({b, a});
  IsomorphismReport report;
  report.lifted = factor * factor * f;
  const DimensionReport target = verify_dimension(report.lifted);

  const double ad = a.get_d();
  const double bd = b.get_d();
  report.lifted_point = lift_gram(source.max_rank_witness, ad, bd);

  std::vector<SymMatrix> pool;
  for (const auto& c : two_squares_variants(f, 16)) pool.push_back(c.gram_point);
  pool.push_back(source.max_rank_witness);

  // Padded to 2d + 3 entries: the top coefficients vanish when a = 0.
  std::vector<double> lifted_coeffs = report.lifted.to_doubles();
  lifted_coeffs.resize(static_cast<std::size_t>(2 * source.d + 3), 0.0);
  double scale = 0;
  for (double c : lifted_coeffs) scale = std::max(scale, std::abs(c));

  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> weight(1.0);
  report.samples = samples;
  report.psd_preserved = true;
  for (int s = 0; s < samples; ++s) {
    SymMatrix q(source.max_rank_witness.size());
    double total = 0;
    for (const auto& g : pool) {
      const double w = weight(rng);
      q += g * w;
      total += w;
    }
    q *= 1.0 / total;

    const SymMatrix lifted = lift_gram(q, ad, bd);
    const std::vector<double> c = gram_apply(lifted);
    double err = 0;
    for (std::size_t m = 0; m < c.size(); ++m) err = std::max(err, std::abs(c[m] - lifted_coeffs[m]));
    report.coefficient_error = std::max(report.coefficient_error, err / scale);

    const bool source_psd = min_eigenvalue(q) >= -kFeasibilityTol * q.trace();
    const bool target_psd = min_eigenvalue(lifted) >= -kFeasibilityTol * lifted.trace();
    if (source_psd && !target_psd) report.psd_preserved = false;
  }
  report.coefficient_identity = report.coefficient_error <= kCoefficientIdentityTol;

  report.induced_rank = induced_map_rank(source.d, a, b);
  report.expected_rank = static_cast<int>(binomial(static_cast<std::uint64_t>(source.d) + 2, 2));
  report.injective = report.induced_rank == report.expected_rank;

  report.source_dim = source.computed;
  report.target_dim = target.computed;
  report.dimension_transport = source.computed.has_value() && source.computed == target.computed;
  return report;
}

}  // namespace gramdim
