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

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace gatetime {

using complex_t = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Numerical tolerances shared by every module.
namespace tol {
inline constexpr double kAlgebraic = 1e-12;
inline constexpr double kUnitarity = 1e-10;
inline constexpr double kComposedEvolution = 1e-9;
}  // namespace tol

/// Raised for malformed numerical input (non-Hermitian exponent,
/// dimension mismatch, non-unitary target ...).
class LinalgError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

bool is_hermitian(const ComplexMatrix& a, double tol = tol::kAlgebraic);
bool is_unitary(const ComplexMatrix& u, double tol = tol::kUnitarity);

/// Returns exp(-i * scale * a) for Hermitian a. Throws LinalgError if a is
/// not square or not Hermitian within tol::kAlgebraic (relative to its
/// largest entry).
ComplexMatrix mat_exp(const ComplexMatrix& a, double scale);

/// Same as mat_exp but skips the Hermiticity check; a is assumed Hermitian.
ComplexMatrix mat_exp_unchecked(const ComplexMatrix& a, double scale);

/// Hilbert-Schmidt (Frobenius) norm sqrt(Tr(A^dagger A)).
double hs_norm(const ComplexMatrix& a);

/// AB - BA.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// Phase-insensitive infidelity 1 - |Tr(U^dagger V)|^2 / d^2, clamped to [0, 1].
double gate_error(const ComplexMatrix& u, const ComplexMatrix& v);

/// Edge operator |n><m| + |m><n| (0-based levels).
ComplexMatrix edge_operator(int dim, int n, int m);

/// V = diag(e^{i theta_1}, ..., e^{i theta_d}).
class DiagonalPhases {
 public:
  DiagonalPhases() = default;
  explicit DiagonalPhases(int dim) : theta_(RealVector::Zero(dim)) {}
  explicit DiagonalPhases(RealVector theta) : theta_(std::move(theta)) {}

  int dim() const { return static_cast<int>(theta_.size()); }
  const RealVector& theta() const { return theta_; }
  double operator[](int i) const { return theta_[i]; }
  double& operator[](int i) { return theta_[i]; }

  ComplexVector diagonal() const;
  ComplexMatrix matrix() const;
  DiagonalPhases inverse() const { return DiagonalPhases(RealVector(-theta_)); }
  bool is_identity(double tol = tol::kAlgebraic) const;

 private:
  RealVector theta_;
};

/// Returns D^dagger A D for D = diag(phases).
ComplexMatrix conjugate_by(const ComplexMatrix& a, const DiagonalPhases& phases);

}  // namespace gatetime
