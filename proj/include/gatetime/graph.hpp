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

#include "gatetime/linalg.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gatetime {

/// Request that cannot be served by the given system, e.g. a path query on
/// a disconnected graph.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One coupling g |n><m| + conj(g) |m><n| with n < m (0-based).
struct Edge {
  int n = 0;
  int m = 0;
  complex_t g{1.0, 0.0};

  double weight() const { return std::abs(g); }
  double phase() const { return std::arg(g); }
};

/// Weighted undirected graph of a zero-diagonal drift Hamiltonian.
///
/// Vertices are basis levels 0..dim-1. Each stored edge (n, m) carries the
/// upper-triangular entry H(n, m); H(m, n) is its conjugate. Self-loops and
/// zero couplings are rejected.
class HamiltonianGraph {
 public:
  HamiltonianGraph() = default;
  explicit HamiltonianGraph(int dim);

  /// Adds or replaces the coupling between n and m. If n > m the coupling is
  /// conjugated so that the stored entry is always H(min, max).
  void set_coupling(int n, int m, complex_t g);
  void set_coupling(int n, int m, double weight) { set_coupling(n, m, complex_t(weight, 0.0)); }

  int dim() const { return dim_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::vector<Edge> edges() const;
  bool has_edge(int n, int m) const;

  /// Returns H(n, m); zero when the edge is absent.
  complex_t coupling(int n, int m) const;
  double weight(int n, int m) const { return std::abs(coupling(n, m)); }
  std::vector<int> neighbors(int v) const;

  ComplexMatrix to_matrix() const;
  bool is_connected() const;

  /// Smallest edge weight. Throws std::invalid_argument on an edgeless graph.
  double g_min() const;

  /// Bitmask over vertex pairs in row-major upper-triangular order.
  std::uint64_t adjacency_bits() const;

  bool operator==(const HamiltonianGraph&) const = default;

 private:
  void check_vertex(int v) const;

  int dim_ = 0;
  std::map<std::pair<int, int>, complex_t> edges_;
};

/// Drift graph plus the fixed control set {P_n = |n><n|}.
struct ControlSystem {
  HamiltonianGraph graph;
  ComplexMatrix drift;

  explicit ControlSystem(HamiltonianGraph g) : graph(std::move(g)), drift(graph.to_matrix()) {}
  int dim() const { return graph.dim(); }
  /// Control operator P_n as a matrix.
  ComplexMatrix control(int n) const;
};

struct PhaseNormalization {
  /// True when a single diagonal conjugation D makes every coupling real
  /// and positive.
  bool consistent = false;
  /// D with D^dagger H D = to_matrix(normalized); identity if !consistent.
  DiagonalPhases correction;
  /// Graph with couplings |g|; the original graph if !consistent.
  HamiltonianGraph normalized;
  /// Set when phases must be removed per edge at isolation time.
  bool deferred_per_edge = false;
};

PhaseNormalization normalize_phases(const HamiltonianGraph& graph);

/// Index of the pair (i, j), i < j, in row-major upper-triangular order.
int pair_index(int dim, int i, int j);

/// One representative per isomorphism class of connected simple graphs on
/// d vertices, unit weights, sorted by canonical code. Accepts 2 <= d <= 7.
std::vector<HamiltonianGraph> enumerate_connected_graphs(int d);

/// Canonical code: minimal adjacency bitmask over all vertex relabelings.
std::uint64_t canonical_code(const HamiltonianGraph& graph);

/// Same edge set with i.i.d. weights uniform in [low, high] (phase 0).
HamiltonianGraph random_weights(const HamiltonianGraph& graph, double low, double high,
                                std::uint64_t seed);

/// Path 0-1-...-(d-1) with all weights 1/sqrt(2(d-1)), so ||H0||_HS = 1.
HamiltonianGraph tight_binding(int d);

/// Complete graph on d vertices with unit weights.
HamiltonianGraph complete_graph(int d);

}  // namespace gatetime
