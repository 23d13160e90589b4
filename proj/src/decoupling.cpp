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

#include "gatetime/decoupling.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gatetime {

AveragingMap::AveragingMap(int dim, std::vector<ComplexVector> diagonals)
    : dim_(dim), diagonals_(std::move(diagonals)) {
  if (diagonals_.empty()) throw std::invalid_argument("AveragingMap: unitary set must be nonempty");
  for (const auto& v : diagonals_) {
    if (v.size() != dim_) throw std::invalid_argument("AveragingMap: dimension mismatch");
    for (Eigen::Index k = 0; k < v.size(); ++k) {
      if (std::abs(std::abs(v[k]) - 1.0) > tol::kUnitarity) {
        throw std::invalid_argument("AveragingMap: element is not unitary");
      }
    }
  }
}

AveragingMap AveragingMap::identity(int dim) {
  return AveragingMap(dim, {ComplexVector::Ones(dim)});
}

EffectiveHamiltonian apply_map(const AveragingMap& map, const ComplexMatrix& h) {
  if (h.rows() != map.dim() || h.cols() != map.dim()) {
    throw LinalgError("apply_map: dimension mismatch");
  }
  ComplexMatrix acc = ComplexMatrix::Zero(h.rows(), h.cols());
  for (const auto& v : map.diagonals()) {
    for (Eigen::Index r = 0; r < h.rows(); ++r) {
      for (Eigen::Index c = 0; c < h.cols(); ++c) acc(r, c) += std::conj(v[r]) * h(r, c) * v[c];
    }
  }
  acc /= static_cast<double>(map.size());
  return {acc, map};
}

AveragingMap vertex_removal_map(int j, int d) {
  if (j < 0 || j >= d) {
    throw std::out_of_range("vertex_removal_map: vertex " + std::to_string(j) +
                            " out of range for dim " + std::to_string(d));
  }
  ComplexVector v = ComplexVector::Ones(d);
  v[j] = -1.0;
  return AveragingMap(d, {ComplexVector::Ones(d), v});
}

AveragingMap compose_maps(const std::vector<AveragingMap>& maps) {
  if (maps.empty()) throw std::invalid_argument("compose_maps: empty list");
  const int d = maps.front().dim();
  std::vector<ComplexVector> acc = maps.front().diagonals();
  for (std::size_t i = 1; i < maps.size(); ++i) {
    if (maps[i].dim() != d) throw std::invalid_argument("compose_maps: dimension mismatch");
    std::vector<ComplexVector> next;
    next.reserve(acc.size() * maps[i].size());
    for (const auto& a : acc) {
      for (const auto& b : maps[i].diagonals()) next.push_back(a.cwiseProduct(b));
    }
    acc = std::move(next);
  }
  return AveragingMap(d, std::move(acc));
}

EdgeIsolation isolate_edge(const HamiltonianGraph& graph, int n, int m) {
  if (n == m || !graph.has_edge(n, m)) {
    throw InfeasibleError("isolate_edge: (" + std::to_string(n + 1) + "," + std::to_string(m + 1) +
                          ") is not an edge of the drift graph");
  }
  if (n > m) std::swap(n, m);
  const int d = graph.dim();
  std::vector<AveragingMap> removals;
  for (int j = 0; j < d; ++j) {
    if (j != n && j != m) removals.push_back(vertex_removal_map(j, d));
  }
  AveragingMap map = removals.empty() ? AveragingMap::identity(d) : compose_maps(removals);

  EdgeIsolation out;
  // Every element has v[n] = v[m] = 1, so the (n, m) entry is reproduced
  // exactly and all other entries cancel exactly.
  out.raw = apply_map(map, graph.to_matrix()).matrix;
  const complex_t g = graph.coupling(n, m);

  RealVector theta = RealVector::Zero(d);
  theta[m] = -std::arg(g);
  out.correction = DiagonalPhases(theta);
  out.effective = {std::abs(g) * edge_operator(d, n, m), map};
  out.map = std::move(map);
  return out;
}

ComplexMatrix trotter_sequence(const AveragingMap& map, const ComplexMatrix& h, double t, int n) {
  if (n < 1) throw std::invalid_argument("trotter_sequence: n must be >= 1");
  if (t < 0.0) throw std::invalid_argument("trotter_sequence: t must be >= 0");
  const Eigen::Index d = h.rows();
  const double tau = t / (static_cast<double>(map.size()) * n);
  const ComplexMatrix step = mat_exp(h, tau);
  ComplexMatrix lambda = ComplexMatrix::Identity(d, d);
  for (const auto& v : map.diagonals()) {
    ComplexMatrix conj_step(d, d);
    for (Eigen::Index r = 0; r < d; ++r) {
      for (Eigen::Index c = 0; c < d; ++c) conj_step(r, c) = std::conj(v[r]) * step(r, c) * v[c];
    }
    lambda = lambda * conj_step;
  }
  // Square-and-multiply; identical to n sequential products up to rounding.
  ComplexMatrix result = ComplexMatrix::Identity(d, d);
  ComplexMatrix base = lambda;
  for (int e = n; e > 0; e >>= 1) {
    if (e & 1) result = result * base;
    if (e > 1) base = base * base;
  }
  return result;
}

double trotter_error(const AveragingMap& map, const ComplexMatrix& h, double t, int n) {
  const ComplexMatrix exact = mat_exp(apply_map(map, h).matrix, t);
  return hs_norm(trotter_sequence(map, h, t, n) - exact);
}

}  // namespace gatetime
