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

#include "gatetime/graph.hpp"
#include "gatetime/linalg.hpp"

#include <string>
#include <vector>

namespace gatetime {

/// Finite set of diagonal unitaries v defining M(H) = (1/|V|) sum v^dagger H v.
///
/// Elements are stored by their diagonals. Duplicates are kept, since they
/// change the weights of the average. The list order is the order used by
/// trotter_sequence.
class AveragingMap {
 public:
  AveragingMap() = default;
  AveragingMap(int dim, std::vector<ComplexVector> diagonals);

  static AveragingMap identity(int dim);

  int dim() const { return dim_; }
  std::size_t size() const { return diagonals_.size(); }
  const std::vector<ComplexVector>& diagonals() const { return diagonals_; }
  ComplexMatrix unitary(std::size_t k) const { return diagonals_.at(k).asDiagonal(); }

 private:
  int dim_ = 0;
  std::vector<ComplexVector> diagonals_;
};

struct EffectiveHamiltonian {
  ComplexMatrix matrix;
  AveragingMap map;
};

EffectiveHamiltonian apply_map(const AveragingMap& map, const ComplexMatrix& h);

/// V_j = {1, 1 - 2 P_j}; removes vertex j (0-based) from a zero-diagonal drift.
AveragingMap vertex_removal_map(int j, int d);

/// Flattened map with elements v_1 v_2 ... (v_i in V_i), first factor slowest.
AveragingMap compose_maps(const std::vector<AveragingMap>& maps);

struct EdgeIsolation {
  /// Composition of vertex removals for every vertex other than n, m.
  AveragingMap map;
  /// M(H0): only the (n, m) coupling survives, with its original phase.
  ComplexMatrix raw;
  /// D^dagger raw D = |g_nm| B_nm.
  EffectiveHamiltonian effective;
  DiagonalPhases correction;
};

/// Throws InfeasibleError if (n, m) is not an edge of the graph.
EdgeIsolation isolate_edge(const HamiltonianGraph& graph, int n, int m);

/// (Lambda_{t/n})^n with Lambda_tau = prod_v v^dagger exp(-i H t/(|V| n)) v,
/// product taken left to right over the map's element list.
ComplexMatrix trotter_sequence(const AveragingMap& map, const ComplexMatrix& h, double t, int n);

/// ||trotter_sequence - exp(-i M(H) t)||_HS.
double trotter_error(const AveragingMap& map, const ComplexMatrix& h, double t, int n);

}  // namespace gatetime
