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

#include "gatetime/graph.hpp"

#include "gatetime/random.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <queue>
#include <set>
#include <string>

namespace gatetime {

HamiltonianGraph::HamiltonianGraph(int dim) : dim_(dim) {
  if (dim < 1) throw std::invalid_argument("HamiltonianGraph: dim must be >= 1");
}

void HamiltonianGraph::check_vertex(int v) const {
  if (v < 0 || v >= dim_) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range for dim " +
                            std::to_string(dim_));
  }
}

void HamiltonianGraph::set_coupling(int n, int m, complex_t g) {
  check_vertex(n);
  check_vertex(m);
  if (n == m) throw std::invalid_argument("self-loops are not allowed (zero-diagonal drift)");
  if (std::abs(g) == 0.0) throw std::invalid_argument("edge weight must be nonzero");
  if (n > m) {
    std::swap(n, m);
    g = std::conj(g);
  }
  edges_[{n, m}] = g;
}

std::vector<Edge> HamiltonianGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (const auto& [key, g] : edges_) out.push_back({key.first, key.second, g});
  return out;
}

bool HamiltonianGraph::has_edge(int n, int m) const {
  if (n > m) std::swap(n, m);
  return edges_.contains({n, m});
}

complex_t HamiltonianGraph::coupling(int n, int m) const {
  const bool flipped = n > m;
  if (flipped) std::swap(n, m);
  auto it = edges_.find({n, m});
  if (it == edges_.end()) return {0.0, 0.0};
  return flipped ? std::conj(it->second) : it->second;
}

std::vector<int> HamiltonianGraph::neighbors(int v) const {
  check_vertex(v);
  std::vector<int> out;
  for (const auto& [key, g] : edges_) {
    if (key.first == v) out.push_back(key.second);
    if (key.second == v) out.push_back(key.first);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ComplexMatrix HamiltonianGraph::to_matrix() const {
  ComplexMatrix h = ComplexMatrix::Zero(dim_, dim_);
  for (const auto& [key, g] : edges_) {
    h(key.first, key.second) = g;
    h(key.second, key.first) = std::conj(g);
  }
  return h;
}

bool HamiltonianGraph::is_connected() const {
  if (dim_ <= 1) return true;
  std::vector<bool> seen(dim_, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == dim_;
}

double HamiltonianGraph::g_min() const {
  if (edges_.empty()) throw std::invalid_argument("g_min: graph has no edges");
  double best = std::numeric_limits<double>::infinity();
  for (const auto& [key, g] : edges_) best = std::min(best, std::abs(g));
  return best;
}

std::uint64_t HamiltonianGraph::adjacency_bits() const {
  std::uint64_t bits = 0;
  for (const auto& [key, g] : edges_) bits |= std::uint64_t{1} << pair_index(dim_, key.first, key.second);
  return bits;
}

ComplexMatrix ControlSystem::control(int n) const {
  ComplexMatrix p = ComplexMatrix::Zero(dim(), dim());
  p(n, n) = 1.0;
  return p;
}

PhaseNormalization normalize_phases(const HamiltonianGraph& graph) {
  const int d = graph.dim();
  RealVector theta = RealVector::Zero(d);
  std::vector<bool> seen(d, false);
  std::set<std::pair<int, int>> tree;

  // D^dagger H D has entry e^{-i theta_u} H(u,v) e^{i theta_v}; choose
  // theta_v = theta_u - arg H(u,v) along a spanning forest.
  for (int root = 0; root < d; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v : graph.neighbors(u)) {
        if (seen[v]) continue;
        seen[v] = true;
        theta[v] = theta[u] - std::arg(graph.coupling(u, v));
        tree.insert({std::min(u, v), std::max(u, v)});
        q.push(v);
      }
    }
  }

  PhaseNormalization out;
  out.correction = DiagonalPhases(theta);
  out.consistent = true;
  for (const Edge& e : graph.edges()) {
    if (tree.contains({e.n, e.m})) continue;
    const complex_t residual = std::polar(1.0, e.phase() - theta[e.n] + theta[e.m]);
    if (std::abs(residual - 1.0) > tol::kAlgebraic) {
      out.consistent = false;
      break;
    }
  }

  if (out.consistent) {
    HamiltonianGraph normalized(d);
    for (const Edge& e : graph.edges()) normalized.set_coupling(e.n, e.m, e.weight());
    out.normalized = std::move(normalized);
  } else {
    out.correction = DiagonalPhases(d);
    out.normalized = graph;
    out.deferred_per_edge = true;
  }
  return out;
}

int pair_index(int dim, int i, int j) {
  if (i > j) std::swap(i, j);
  // Pairs (0,1), (0,2), ..., (0,d-1), (1,2), ...
  return i * dim - i * (i + 1) / 2 + (j - i - 1);
}

namespace {

void check_enumeration_dim(int d) {
  if (d < 2 || d > 7) {
    throw std::invalid_argument("enumerate_connected_graphs: d must be in [2, 7], got " +
                                std::to_string(d));
  }
}

// For every vertex permutation, the image of each pair index.
std::vector<std::vector<int>> permuted_pair_tables(int d) {
  std::vector<int> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  const int pairs = d * (d - 1) / 2;
  std::vector<std::vector<int>> tables;
  do {
    std::vector<int> table(pairs);
    for (int i = 0; i < d; ++i) {
      for (int j = i + 1; j < d; ++j) table[pair_index(d, i, j)] = pair_index(d, perm[i], perm[j]);
    }
    tables.push_back(std::move(table));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return tables;
}

std::uint64_t canonical_from_bits(std::uint64_t bits, const std::vector<std::vector<int>>& tables) {
  std::uint64_t best = ~std::uint64_t{0};
  for (const auto& table : tables) {
    std::uint64_t code = 0;
    for (std::size_t p = 0; p < table.size(); ++p) {
      if (bits >> p & 1U) code |= std::uint64_t{1} << table[p];
    }
    best = std::min(best, code);
  }
  return best;
}

HamiltonianGraph graph_from_bits(int d, std::uint64_t bits) {
  HamiltonianGraph g(d);
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      if (bits >> pair_index(d, i, j) & 1U) g.set_coupling(i, j, 1.0);
    }
  }
  return g;
}

}  // namespace

std::uint64_t canonical_code(const HamiltonianGraph& graph) {
  return canonical_from_bits(graph.adjacency_bits(), permuted_pair_tables(graph.dim()));
}

std::vector<HamiltonianGraph> enumerate_connected_graphs(int d) {
  check_enumeration_dim(d);
  const auto tables = permuted_pair_tables(d);
  const int pairs = d * (d - 1) / 2;
  // Each isomorphism class is expanded once; all its relabelings are marked.
  std::vector<bool> visited(std::size_t{1} << pairs, false);
  std::set<std::uint64_t> codes;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs); ++bits) {
    if (visited[bits]) continue;
    std::uint64_t best = ~std::uint64_t{0};
    for (const auto& table : tables) {
      std::uint64_t image = 0;
      for (int p = 0; p < pairs; ++p) {
        if (bits >> p & 1U) image |= std::uint64_t{1} << table[p];
      }
      visited[image] = true;
      best = std::min(best, image);
    }
    if (std::popcount(bits) >= d - 1 && graph_from_bits(d, bits).is_connected()) codes.insert(best);
  }
  std::vector<HamiltonianGraph> out;
  out.reserve(codes.size());
  for (std::uint64_t code : codes) out.push_back(graph_from_bits(d, code));
  return out;
}

HamiltonianGraph random_weights(const HamiltonianGraph& graph, double low, double high,
                                std::uint64_t seed) {
  if (!(low > 0.0)) throw std::invalid_argument("random_weights: low must be > 0");
  if (high < low) throw std::invalid_argument("random_weights: high must be >= low");
  Rng rng(seed);
  HamiltonianGraph out(graph.dim());
  for (const Edge& e : graph.edges()) out.set_coupling(e.n, e.m, rng.uniform(low, high));
  return out;
}

HamiltonianGraph tight_binding(int d) {
  if (d < 2) throw std::invalid_argument("tight_binding: d must be >= 2");
  const double j = 1.0 / std::sqrt(2.0 * (d - 1));
  HamiltonianGraph g(d);
  for (int k = 0; k + 1 < d; ++k) g.set_coupling(k, k + 1, j);
  return g;
}

HamiltonianGraph complete_graph(int d) {
  HamiltonianGraph g(d);
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) g.set_coupling(i, j, 1.0);
  }
  return g;
}

}  // namespace gatetime
