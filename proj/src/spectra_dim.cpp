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

#include "gramdim/spectra_dim.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "gramdim/errors.hpp"
#include "gramdim/sos_cert.hpp"

namespace gramdim {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// A direction that leaves the face of the current point still admits a
// segment of width ~sqrt(floor) because lambda_min falls off quadratically.
// Segments are used only when they are far wider than that.
constexpr double kSweepFloorTol = 1e-14;
constexpr double kSegmentTol = 1e-5;

double psd_scale(const SymMatrix& q) {
  return std::max({std::abs(q.trace()), q.max_abs(), std::numeric_limits<double>::min()});
}

double gershgorin_upper(const SymMatrix& q) {
  const Eigen::MatrixXd& m = q.dense();
  double bound = -kInf;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    bound = std::max(bound, m(i, i) + m.row(i).cwiseAbs().sum() - std::abs(m(i, i)));
  }
  return bound;
}

// Largest t >= 0 with lambda_min(q + t dir) >= floor, given that t = 0 is
// admissible.
double extent(const SymMatrix& q, const SymMatrix& dir, double floor, double rel_precision) {
  const double lam_dir = min_eigenvalue(dir);
  if (lam_dir >= 0) return kInf;
  auto admissible = [&](double t) { return min_eigenvalue(q + dir * t) >= floor; };

  // lambda_min(q + t dir) <= lambda_max(q) + t lambda_min(dir).
  double hi = (gershgorin_upper(q) - floor) / -lam_dir;
  hi = hi * (1 + 1e-12) + std::numeric_limits<double>::min();
  for (int grow = 0; admissible(hi); ++grow) {
    if (grow > 60) return kInf;
    hi *= 2;
  }
  double lo = 0;
  for (int iter = 0; iter < 200 && hi - lo > rel_precision * hi; ++iter) {
    const double mid = 0.5 * (lo + hi);
    (admissible(mid) ? lo : hi) = mid;
  }
  return lo;
}

PsdInterval line_search(const SymMatrix& q, const SymMatrix& direction, double rel_precision,
                        double floor_tol = 1e-12) {
  if (q.size() != direction.size()) throw InvalidInput("line search: size mismatch");
  const double scale = psd_scale(q);
  const double lam0 = min_eigenvalue(q);
  if (lam0 < -kFeasibilityTol * scale) throw InvalidInput("line search: base point is not PSD");
  const double floor = std::min(lam0, 0.0) - floor_tol * scale;
  const double up = extent(q, direction, floor, rel_precision);
  const double down = extent(q, direction * -1.0, floor, rel_precision);
  return {-down, up};
}

SweepRecord record(const GramAffineSpace& space, const SymMatrix& x, double rank_tol) {
  const double tr = x.trace();
  return {numeric_rank(x, rank_tol), tr > 0 ? min_eigenvalue(x) / tr : min_eigenvalue(x),
          space.residual(x)};
}

bool feasible(const GramAffineSpace& space, const SymMatrix& x) {
  if (x.size() != space.n) return false;
  return min_eigenvalue(x) >= -kFeasibilityTol * psd_scale(x) && space.residual(x) <= kGramResidualTol;
}

MaxRankResult run_sweeps(const GramAffineSpace& space, SymMatrix x,
                         const std::vector<SymMatrix>& directions, const DimensionOptions& options) {
  MaxRankResult result;
  result.sweeps.push_back(record(space, x, options.rank_tol));
  int stable = 0;
  for (int sweep = 0; sweep < options.max_sweeps; ++sweep) {
    SymMatrix sum = x;
    int count = 1;
    const double x_norm = std::max(x.frobenius_norm(), std::numeric_limits<double>::min());
    for (const auto& dir : directions) {
      const double dir_norm = dir.frobenius_norm();
      if (dir_norm == 0) continue;
      const PsdInterval seg = line_search(x, dir, 1e-10, kSweepFloorTol);
      if (!std::isfinite(seg.t_min) || !std::isfinite(seg.t_max)) continue;
      if (seg.width() * dir_norm <= kSegmentTol * x_norm) continue;
      sum += x + dir * (0.5 * (seg.t_min + seg.t_max));
      ++count;
    }
    x = sum * (1.0 / count);
    const SweepRecord rec = record(space, x, options.rank_tol);
    stable = rec.rank == result.sweeps.back().rank ? stable + 1 : 0;
    result.sweeps.push_back(rec);
    if (stable >= options.stable_sweeps) {
      result.converged = true;
      break;
    }
  }
  result.rank = result.sweeps.back().rank;
  result.point = std::move(x);
  return result;
}

}  // namespace

PsdInterval psd_line_search(const SymMatrix& q, const SymMatrix& direction) {
  return line_search(q, direction, 1e-15);
}

MaxRankResult max_rank_point(const GramAffineSpace& space, const SymMatrix& start,
                             const DimensionOptions& options) {
  return max_rank_point(space, std::span<const SymMatrix>(&start, 1), options);
}

MaxRankResult max_rank_point(const GramAffineSpace& space, std::span<const SymMatrix> starts,
                             const DimensionOptions& options) {
  if (starts.empty()) throw InvalidInput("max_rank_point needs a start point");
  SymMatrix center(space.n);
  for (const auto& s : starts) {
    if (!feasible(space, s)) throw InvalidInput("max_rank_point: start point is not feasible");
    center += s;
  }
  center *= 1.0 / static_cast<double>(starts.size());

  std::vector<SymMatrix> directions = space.kernel;
  if (starts.size() > 1) {
    for (const auto& s : starts) directions.push_back(s - center);
  }
  return run_sweeps(space, std::move(center), directions, options);
}

int face_dimension(const GramAffineSpace& space, const SymMatrix& witness, double rank_tol) {
  if (!feasible(space, witness)) throw InvalidInput("face_dimension: witness is not feasible");
  const auto k = static_cast<Eigen::Index>(space.kernel.size());
  if (k == 0) return 0;

  // P projects onto the complement of range(witness).
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(witness.dense());
  if (eig.info() != Eigen::Success) throw NumericalFailure("symmetric eigenvalue iteration failed");
  const Eigen::VectorXd& ev = eig.eigenvalues();
  const double top = ev.cwiseAbs().maxCoeff();
  const Eigen::Index n = witness.size();
  Eigen::MatrixXd complement(n, 0);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!(ev(i) > rank_tol * top)) {
      complement.conservativeResize(n, complement.cols() + 1);
      complement.col(complement.cols() - 1) = eig.eigenvectors().col(i);
    }
  }
  if (complement.cols() == 0) return static_cast<int>(k);
  const Eigen::MatrixXd proj = complement * complement.transpose();

  Eigen::MatrixXd system(n * n, k);
  double basis_scale = 0;
  for (Eigen::Index c = 0; c < k; ++c) {
    const auto& b = space.kernel[static_cast<std::size_t>(c)].dense();
    system.col(c) = (proj * b).reshaped();
    basis_scale = std::max(basis_scale, b.norm());
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(system);
  const Eigen::VectorXd& sv = svd.singularValues();
  if (sv(0) <= 1e-12 * basis_scale) return static_cast<int>(k);
  const auto rank = (sv.array() > rank_tol * sv(0)).count();
  return static_cast<int>(k - rank);
}

std::string_view to_string(DimensionStatus status) {
  return status == DimensionStatus::kDetermined ? "determined" : "undetermined";
}

DimensionReport verify_dimension(const Polynomial& f, const DimensionOptions& options) {
  if (f.is_zero()) throw InvalidInput("the zero polynomial has no Gram spectrahedron");
  DimensionReport report;
  report.deflation = real_root_excess(f);
  report.d = f.degree() / 2;
  report.e = report.deflation.excess;
  report.predicted = gram_space_dimension(report.d - report.e);

  const GramAffineSpace space = build_gram_space(f);
  const auto certs = two_squares_variants(f, 16);
  std::vector<SymMatrix> starts;
  for (const auto& c : certs) {
    starts.push_back(c.gram_point);
    report.sos_residual = std::max(report.sos_residual, c.residual);
  }

  MaxRankResult mr = max_rank_point(space, starts, options);
  report.sweeps = static_cast<int>(mr.sweeps.size()) - 1;
  report.witness_rank = mr.rank;
  report.max_rank_witness = std::move(mr.point);
  if (mr.converged) {
    report.status = DimensionStatus::kDetermined;
    report.computed = face_dimension(space, report.max_rank_witness, options.rank_tol);
  }
  report.agreement = report.computed.has_value() &&
                     static_cast<std::uint64_t>(*report.computed) == report.predicted;
  return report;
}

int brute_force_dimension(const Polynomial& f, int samples, std::uint64_t seed, double rank_tol) {
  if (f.is_zero()) throw InvalidInput("the zero polynomial has no Gram spectrahedron");
  if (samples < 1) throw InvalidInput("brute_force_dimension needs at least one sample");
  const DeflationReport deflation = real_root_excess(f);
  const GramAffineSpace space = build_gram_space(f);
  const auto k = static_cast<Eigen::Index>(space.kernel.size());
  const Eigen::Index n = space.n;

  SymMatrix seed_point(space.n);
  const auto certs = two_squares_variants(f, 16);
  for (const auto& c : certs) seed_point += c.gram_point;
  seed_point *= 1.0 / static_cast<double>(certs.size());
  if (k == 0) {
    if (!feasible(space, seed_point)) throw NumericalFailure("certificate point is infeasible");
    return 0;
  }

  // Q(t) w = 0 for w = j-th derivative of (1, x, ..., x^d) at each real root.
  std::vector<Eigen::VectorXd> null_vectors;
  for (const auto& [r, e] : deflation.real_roots) {
    for (int j = 0; j < e; ++j) {
      Eigen::VectorXd w = Eigen::VectorXd::Zero(n);
      for (Eigen::Index i = j; i < n; ++i) {
        double falling = 1;
        for (int s = 0; s < j; ++s) falling *= static_cast<double>(i - s);
        w(i) = falling * std::pow(r, static_cast<double>(i - j));
      }
      null_vectors.push_back(w / w.norm());
    }
  }

  Eigen::VectorXd t_particular = Eigen::VectorXd::Zero(k);
  Eigen::MatrixXd subspace = Eigen::MatrixXd::Identity(k, k);
  if (!null_vectors.empty()) {
    const auto rows = static_cast<Eigen::Index>(null_vectors.size()) * n;
    Eigen::MatrixXd a(rows, k);
    Eigen::VectorXd b(rows);
    for (std::size_t v = 0; v < null_vectors.size(); ++v) {
      const auto r0 = static_cast<Eigen::Index>(v) * n;
      b.segment(r0, n) = -(space.q0.dense() * null_vectors[v]);
      for (Eigen::Index c = 0; c < k; ++c) {
        a.block(r0, c, n, 1) = space.kernel[static_cast<std::size_t>(c)].dense() * null_vectors[v];
      }
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullV | Eigen::ComputeThinU);
    const Eigen::VectorXd& sv = svd.singularValues();
    Eigen::Index rank = 0;
    while (rank < sv.size() && sv(rank) > 1e-10 * sv(0)) ++rank;
    svd.setThreshold(1e-10);
    t_particular = svd.solve(b);
    const double mismatch = (a * t_particular - b).norm();
    if (mismatch > 1e-8 * std::max(1.0, b.norm())) {
      throw NumericalFailure("root vanishing conditions are inconsistent");
    }
    subspace = svd.matrixV().rightCols(k - rank);
  }

  const std::vector<double> seed_t = space.coordinates(seed_point);
  const Eigen::VectorXd seed_vec = Eigen::Map<const Eigen::VectorXd>(seed_t.data(), k);
  const Eigen::VectorXd s_center = subspace.transpose() * (seed_vec - t_particular);
  const Eigen::VectorXd t_center = t_particular + subspace * s_center;
  auto point_at = [&](const Eigen::VectorXd& t) {
    return space.point(std::span<const double>(t.data(), static_cast<std::size_t>(t.size())));
  };
  const SymMatrix center = point_at(t_center);
  if (!feasible(space, center)) throw NumericalFailure("certificate point is infeasible");
  const Eigen::Index m = subspace.cols();
  if (m == 0) return 0;

  Eigen::VectorXd half_width(m);
  for (Eigen::Index a = 0; a < m; ++a) {
    SymMatrix dir(space.n);
    for (Eigen::Index c = 0; c < k; ++c) dir += space.kernel[static_cast<std::size_t>(c)] * subspace(c, a);
    const PsdInterval seg = line_search(center, dir, 1e-6);
    double h = 2 * std::max(std::abs(seg.t_min), std::abs(seg.t_max));
    if (!std::isfinite(h)) throw NumericalFailure("unbounded direction in a compact spectrahedron");
    half_width(a) = h;
  }

  const double floor = -1e-10 * psd_scale(center);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<Eigen::VectorXd> hits;
  for (int round = 0; round < 6; ++round) {
    hits.clear();
    std::vector<bool> crowded(static_cast<std::size_t>(m), false);
    for (int draw = 0; draw < samples; ++draw) {
      Eigen::VectorXd u(m);
      for (Eigen::Index a = 0; a < m; ++a) u(a) = unit(rng);
      const Eigen::VectorXd t = t_center + subspace * u.cwiseProduct(half_width);
      if (min_eigenvalue(point_at(t)) < floor) continue;
      hits.push_back(t);
      for (Eigen::Index a = 0; a < m; ++a) {
        if (std::abs(u(a)) > 0.9 && half_width(a) > 0) crowded[static_cast<std::size_t>(a)] = true;
      }
    }
    if (std::none_of(crowded.begin(), crowded.end(), [](bool c) { return c; })) break;
    for (Eigen::Index a = 0; a < m; ++a) {
      if (crowded[static_cast<std::size_t>(a)]) half_width(a) *= 2;
    }
  }
  if (hits.size() <= 1) return 0;

  Eigen::MatrixXd cloud(static_cast<Eigen::Index>(hits.size()), k);
  for (std::size_t i = 0; i < hits.size(); ++i) cloud.row(static_cast<Eigen::Index>(i)) = hits[i].transpose();
  cloud.rowwise() -= cloud.colwise().mean();
  return numeric_rank(cloud, rank_tol);
}

}  // namespace gramdim
