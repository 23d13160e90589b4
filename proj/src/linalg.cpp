// Copyright 2026 The gatetime Authors
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

#include "gatetime/linalg.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace gatetime {

namespace {

double max_abs_entry(const ComplexMatrix& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

void require_square(const ComplexMatrix& a, const char* what) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    throw LinalgError(std::string(what) + ": expected a non-empty square matrix, got " +
                      std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
}

}  // namespace

bool is_hermitian(const ComplexMatrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  const double scale = std::max(1.0, max_abs_entry(a));
  return max_abs_entry(a - a.adjoint()) <= tol * scale;
}

bool is_unitary(const ComplexMatrix& u, double tol) {
  if (u.rows() != u.cols() || u.rows() == 0) return false;
  const auto id = ComplexMatrix::Identity(u.rows(), u.cols());
  return hs_norm(u.adjoint() * u - id) <= tol;
}

ComplexMatrix mat_exp(const ComplexMatrix& a, double scale) {
  require_square(a, "mat_exp");
  if (!is_hermitian(a)) {
    throw LinalgError("mat_exp: exponent is not Hermitian (max |A - A^dagger| = " +
                      std::to_string(max_abs_entry(a - a.adjoint())) + ")");
  }
  return mat_exp_unchecked(a, scale);
}

ComplexMatrix mat_exp_unchecked(const ComplexMatrix& a, double scale) {
  if (scale == 0.0) return ComplexMatrix::Identity(a.rows(), a.cols());
  // Symmetrize so the solver sees an exactly Hermitian matrix.
  const ComplexMatrix h = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  const RealVector& w = es.eigenvalues();
  ComplexVector phases(w.size());
  for (Eigen::Index k = 0; k < w.size(); ++k) {
    phases[k] = std::polar(1.0, -scale * w[k]);
  }
  const ComplexMatrix& q = es.eigenvectors();
  return q * phases.asDiagonal() * q.adjoint();
}

double hs_norm(const ComplexMatrix& a) { return std::sqrt(a.cwiseAbs2().sum()); }

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols()) {
    throw LinalgError("commutator: dimension mismatch");
  }
  return a * b - b * a;
}

double gate_error(const ComplexMatrix& u, const ComplexMatrix& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols()) {
    throw LinalgError("gate_error: dimension mismatch");
  }
  const double d = static_cast<double>(u.rows());
  const complex_t overlap = (u.adjoint() * v).trace();
  const double fidelity = std::norm(overlap) / (d * d);
  return std::clamp(1.0 - fidelity, 0.0, 1.0);
}

ComplexMatrix edge_operator(int dim, int n, int m) {
  ComplexMatrix b = ComplexMatrix::Zero(dim, dim);
  b(n, m) = 1.0;
  b(m, n) = 1.0;
  return b;
}

ComplexVector DiagonalPhases::diagonal() const {
  ComplexVector v(theta_.size());
  for (Eigen::Index k = 0; k < theta_.size(); ++k) v[k] = std::polar(1.0, theta_[k]);
  return v;
}

ComplexMatrix DiagonalPhases::matrix() const { return diagonal().asDiagonal(); }

bool DiagonalPhases::is_identity(double tol) const {
  for (Eigen::Index k = 0; k < theta_.size(); ++k) {
    if (std::abs(std::polar(1.0, theta_[k]) - 1.0) > tol) return false;
  }
  return true;
}

ComplexMatrix conjugate_by(const ComplexMatrix& a, const DiagonalPhases& phases) {
  const ComplexVector v = phases.diagonal();
  ComplexMatrix out(a.rows(), a.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) out(r, c) = std::conj(v[r]) * a(r, c) * v[c];
  }
  return out;
}

}  // namespace gatetime
