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

#include "gramdim/sym_matrix.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>

#include "gramdim/errors.hpp"

namespace gramdim {

SymMatrix::SymMatrix(int n) : m_(Eigen::MatrixXd::Zero(n, n)) {}

SymMatrix::SymMatrix(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) throw InvalidInput("SymMatrix needs a square matrix");
  m_ = (m + m.transpose()) * 0.5;
}

SymMatrix::SymMatrix(std::initializer_list<std::initializer_list<double>> rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXd m(n, n);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Eigen::Index>(row.size()) != n) throw InvalidInput("SymMatrix rows must be square");
    Eigen::Index j = 0;
    for (double v : row) m(i, j++) = v;
    ++i;
  }
  *this = SymMatrix(m);
}

SymMatrix SymMatrix::identity(int n) {
  SymMatrix s(n);
  s.m_.setIdentity();
  return s;
}

SymMatrix SymMatrix::diagonal(std::span<const double> values) {
  SymMatrix s(static_cast<int>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) s.m_(i, i) = values[i];
  return s;
}

SymMatrix SymMatrix::outer(std::span<const double> v) {
  Eigen::Map<const Eigen::VectorXd> vec(v.data(), static_cast<Eigen::Index>(v.size()));
  SymMatrix s;
  s.m_ = vec * vec.transpose();
  return s;
}

SymMatrix SymMatrix::unit(int n, int i, int j) {
  SymMatrix s(n);
  s.set(i, j, 1.0);
  return s;
}

void SymMatrix::set(int i, int j, double value) {
  m_(i, j) = value;
  m_(j, i) = value;
}

void SymMatrix::add(int i, int j, double value) {
  m_(i, j) += value;
  if (i != j) m_(j, i) += value;
}

double SymMatrix::max_abs() const { return m_.size() == 0 ? 0.0 : m_.cwiseAbs().maxCoeff(); }

SymMatrix& SymMatrix::operator+=(const SymMatrix& rhs) {
  m_ += rhs.m_;
  return *this;
}

SymMatrix& SymMatrix::operator-=(const SymMatrix& rhs) {
  m_ -= rhs.m_;
  return *this;
}

SymMatrix& SymMatrix::operator*=(double s) {
  m_ *= s;
  return *this;
}

Eigen::VectorXd eigenvalues(const SymMatrix& m) {
  if (m.size() == 0) return {};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m.dense(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalFailure("symmetric eigenvalue iteration failed");
  return solver.eigenvalues();
}

double min_eigenvalue(const SymMatrix& m) {
  const Eigen::VectorXd ev = eigenvalues(m);
  return ev.size() == 0 ? 0.0 : ev(0);
}

int numeric_rank(const SymMatrix& m, double rel_tol) {
  const Eigen::VectorXd ev = eigenvalues(m);
  if (ev.size() == 0) return 0;
  const double scale = ev.cwiseAbs().maxCoeff();
  if (scale == 0) return 0;
  return static_cast<int>((ev.array() > rel_tol * scale).count());
}

Eigen::MatrixXd range_basis(const SymMatrix& m, double rel_tol) {
  const int n = m.size();
  if (n == 0) return Eigen::MatrixXd(0, 0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m.dense());
  if (solver.info() != Eigen::Success) throw NumericalFailure("symmetric eigenvalue iteration failed");
  const Eigen::VectorXd& ev = solver.eigenvalues();
  const double scale = ev.cwiseAbs().maxCoeff();
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (scale > 0 && ev(i) > rel_tol * scale) keep.push_back(i);
  }
  Eigen::MatrixXd basis(n, static_cast<Eigen::Index>(keep.size()));
  for (std::size_t c = 0; c < keep.size(); ++c) {
    basis.col(static_cast<Eigen::Index>(c)) = solver.eigenvectors().col(keep[c]);
  }
  return basis;
}

int numeric_rank(const Eigen::MatrixXd& m, double rel_tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const Eigen::VectorXd& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0) return 0;
  return static_cast<int>((sv.array() > rel_tol * sv(0)).count());
}

}  // namespace gramdim
