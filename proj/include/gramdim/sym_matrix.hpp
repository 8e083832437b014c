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

#ifndef GRAMDIM_SYM_MATRIX_HPP
#define GRAMDIM_SYM_MATRIX_HPP

#include <Eigen/Core>

#include <initializer_list>
#include <span>
#include <vector>

namespace gramdim {

/// Dense real symmetric matrix.
///
/// Every mutation writes both (i, j) and (j, i), and construction from an
/// arbitrary square matrix symmetrizes it, so entries(i, j) == entries(j, i)
/// holds bit-for-bit. Sums and scalar multiples preserve this exactly.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(int n);
  // Symmetrizes (m + m^T) / 2; throws InvalidInput if m is not square.
  explicit SymMatrix(const Eigen::MatrixXd& m);
  SymMatrix(std::initializer_list<std::initializer_list<double>> rows);

  static SymMatrix identity(int n);
  static SymMatrix diagonal(std::span<const double> values);
  // v v^T
  static SymMatrix outer(std::span<const double> v);
  // E_ij + E_ji for i != j, E_ii otherwise.
  static SymMatrix unit(int n, int i, int j);

  int size() const { return static_cast<int>(m_.rows()); }
  double operator()(int i, int j) const { return m_(i, j); }
  void set(int i, int j, double value);
  void add(int i, int j, double value);
  const Eigen::MatrixXd& dense() const { return m_; }

  double trace() const { return m_.trace(); }
  double frobenius_norm() const { return m_.norm(); }
  double max_abs() const;

  SymMatrix& operator+=(const SymMatrix& rhs);
  SymMatrix& operator-=(const SymMatrix& rhs);
  SymMatrix& operator*=(double s);
  friend SymMatrix operator+(SymMatrix a, const SymMatrix& b) { return a += b; }
  friend SymMatrix operator-(SymMatrix a, const SymMatrix& b) { return a -= b; }
  friend SymMatrix operator*(SymMatrix a, double s) { return a *= s; }
  friend SymMatrix operator*(double s, SymMatrix a) { return a *= s; }
  friend bool operator==(const SymMatrix& a, const SymMatrix& b) {
    return a.m_.rows() == b.m_.rows() && a.m_ == b.m_;
  }

 private:
  Eigen::MatrixXd m_;
};

// Ascending eigenvalues.
Eigen::VectorXd eigenvalues(const SymMatrix& m);
double min_eigenvalue(const SymMatrix& m);

// Number of eigenvalues above rel_tol * (largest |eigenvalue|).
int numeric_rank(const SymMatrix& m, double rel_tol);

// Orthonormal basis (columns) of the eigenvectors whose eigenvalues exceed
// rel_tol * (largest |eigenvalue|).
Eigen::MatrixXd range_basis(const SymMatrix& m, double rel_tol);

// Singular-value rank of a general matrix, relative threshold.
int numeric_rank(const Eigen::MatrixXd& m, double rel_tol);

}  // namespace gramdim

#endif  // GRAMDIM_SYM_MATRIX_HPP
