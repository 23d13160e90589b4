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

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace gatetime {

/// Instantaneous diagonal unitary diag(e^{i theta}).
struct DiagonalPulse {
  DiagonalPhases phases;
};

/// Free evolution under the drift with every vertex except n, m decoupled,
/// for duration |alpha| / |g_nm|. Together with the surrounding diagonal
/// pulses it realizes S_nm(alpha) = exp(-i alpha B_nm).
struct EdgeEvolution {
  int n = 0;
  int m = 0;
  double alpha = 0.0;
  double duration = 0.0;
};

using ScheduleStep = std::variant<DiagonalPulse, EdgeEvolution>;

/// Time-ordered control schedule. Diagonal pulses take zero time; the total
/// time is the sum of the edge-evolution durations.
class PulseSchedule {
 public:
  PulseSchedule() = default;
  explicit PulseSchedule(int dim) : dim_(dim) {}

  int dim() const { return dim_; }
  const std::vector<ScheduleStep>& steps() const { return steps_; }
  double total_time() const { return total_time_; }
  std::size_t edge_evolution_count() const;

  /// Appends a pulse, merging it into a directly preceding diagonal pulse.
  void append_diagonal(const DiagonalPhases& phases);
  void append_edge(const EdgeEvolution& step);
  void append(const PulseSchedule& other);

  std::map<std::string, std::string> metadata;

 private:
  int dim_ = 0;
  std::vector<ScheduleStep> steps_;
  double total_time_ = 0.0;
};

struct PathPlan {
  /// Vertices p_1, ..., p_N. p_1 is the endpoint carried along the chain by
  /// SWAPs, (p_{N-1}, p_N) is the edge that performs the rotation.
  std::vector<int> path;
  double time = 0.0;
};

/// Folds alpha into [-pi/2, pi/2]: S(alpha) = S(pi k) S(reduced), where
/// S(pi k) is the diagonal (-1)^k on the two levels.
double reduce_angle(double alpha, int* half_turns = nullptr);

/// Cost of realizing S(alpha) along a given path:
/// |alpha| / |g(p_{N-1}, p_N)| + pi * sum_{j < N-1} 1 / |g(p_j, p_{j+1})|.
double path_cost(const HamiltonianGraph& graph, const std::vector<int>& path, double alpha);

/// Minimum-cost path between n and m over both orientations, using the
/// reduced angle. Throws InfeasibleError when n and m are not connected.
PathPlan shortest_time_path(const HamiltonianGraph& graph, int n, int m, double alpha);

/// Schedule realizing exactly S_nm(alpha) via the SWAP chain of the
/// shortest-time path. Throws InfeasibleError on a disconnected graph.
PulseSchedule swap_chain_schedule(const HamiltonianGraph& graph, int n, int m, double alpha);

struct TwoLevelUnitary {
  int n = 0;  // n < m
  int m = 0;
  Eigen::Matrix2cd block;

  ComplexMatrix embed(int dim) const;
};

/// U = V_1 V_2 ... V_k with at most d(d-1)/2 factors, by column-wise
/// elimination of subdiagonal entries with levels (c, r), r = c+1..d-1.
/// Throws LinalgError for non-unitary input.
std::vector<TwoLevelUnitary> two_level_decompose(const ComplexMatrix& u);

/// block = e^{i delta} Rz(a) Rx(theta) Rz(b), theta in [0, pi], with
/// Rz(phi) = diag(e^{-i phi/2}, e^{i phi/2}) and Rx(theta) = exp(-i theta X / 2).
struct EulerAngles {
  double a = 0.0;
  double b = 0.0;
  double theta = 0.0;
  double delta = 0.0;

  Eigen::Matrix2cd matrix() const;
};

EulerAngles euler_decompose(const Eigen::Matrix2cd& block);

/// Compiles U_g into diagonal pulses plus one SWAP-chain rotation per
/// two-level factor. Throws InfeasibleError for a disconnected graph and
/// LinalgError for a non-unitary target.
PulseSchedule synthesize(const HamiltonianGraph& graph, const ComplexMatrix& target);

struct SimulationMode {
  /// 0 selects the exact effective-Hamiltonian evolution; n > 0 realizes each
  /// edge evolution as an n-step Trotter decoupling sequence.
  int trotter_steps = 0;

  static SimulationMode ideal() { return {0}; }
  static SimulationMode trotter(int n) { return {n}; }
};

/// Unitary implemented by the schedule on the given drift graph.
ComplexMatrix simulate(const HamiltonianGraph& graph, const PulseSchedule& schedule,
                       SimulationMode mode = SimulationMode::ideal());

/// Checks that every edge evolution refers to an edge of the graph and that
/// the recorded durations match |alpha| / |g|.
void validate_schedule(const HamiltonianGraph& graph, const PulseSchedule& schedule);

/// exp(-i alpha B_nm) as a d x d matrix.
ComplexMatrix edge_rotation(int dim, int n, int m, double alpha);

}  // namespace gatetime
