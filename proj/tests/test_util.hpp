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

// Helpers shared by the unit tests. Reference implementations here avoid the
// library code paths they are compared against.

#include "gatetime/graph.hpp"
#include "gatetime/linalg.hpp"

#include <random>

namespace gatetime::testing {

inline ComplexMatrix random_hermitian(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  ComplexMatrix h(d, d);
  for (int r = 0; r < d; ++r) {
    h(r, r) = n(rng);
    for (int c = r + 1; c < d; ++c) {
      h(r, c) = complex_t(n(rng), n(rng));
      h(c, r) = std::conj(h(r, c));
    }
  }
  return h;
}

/// Haar-like unitary via QR of a complex Ginibre matrix.
inline ComplexMatrix random_unitary(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  ComplexMatrix z(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) z(r, c) = complex_t(n(rng), n(rng));
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  return qr.householderQ() * ComplexMatrix::Identity(d, d);
}

/// exp(-i s A) by scaling and squaring of a truncated Taylor series.
inline ComplexMatrix taylor_exp(const ComplexMatrix& a, double s) {
  const ComplexMatrix x = complex_t(0.0, -s) * a;
  int squarings = 0;
  double norm = x.cwiseAbs().rowwise().sum().maxCoeff();
  while (norm > 0.25) {
    norm /= 2.0;
    ++squarings;
  }
  const ComplexMatrix y = x / std::pow(2.0, squarings);
  ComplexMatrix term = ComplexMatrix::Identity(a.rows(), a.cols());
  ComplexMatrix sum = term;
  for (int k = 1; k <= 24; ++k) {
    term = term * y / static_cast<double>(k);
    sum += term;
  }
  for (int k = 0; k < squarings; ++k) sum = sum * sum;
  return sum;
}

/// Random spanning tree plus extra edges with probability p; weights U[1, 2].
inline HamiltonianGraph random_connected_graph(int d, std::mt19937_64& rng, double p = 0.4) {
  std::uniform_real_distribution<double> w(1.0, 2.0);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  HamiltonianGraph g(d);
  for (int v = 1; v < d; ++v) {
    std::uniform_int_distribution<int> parent(0, v - 1);
    g.set_coupling(parent(rng), v, w(rng));
  }
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b)
      if (!g.has_edge(a, b) && u(rng) < p) g.set_coupling(a, b, w(rng));
  return g;
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace gatetime::testing
