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

#include "gatetime/synthesis.hpp"

#include "gatetime/decoupling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <string>

namespace gatetime {

namespace {

constexpr double kPi = std::numbers::pi;
// Two-level factors with a smaller x-rotation angle are compiled to pure
// diagonal pulses.
constexpr double kMinRotation = 1e-12;

void require_connected(const HamiltonianGraph& graph, const char* what) {
  if (!graph.is_connected()) {
    throw InfeasibleError(std::string(what) + ": drift graph is not connected");
  }
}

// Dijkstra from `source` with edge cost pi / |g|, never entering `excluded`.
struct ChainDistances {
  std::vector<double> dist;
  std::vector<int> parent;
};

ChainDistances chain_distances(const HamiltonianGraph& graph, int source, int excluded) {
  const int d = graph.dim();
  ChainDistances out{std::vector<double>(d, std::numeric_limits<double>::infinity()),
                     std::vector<int>(d, -1)};
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  out.dist[source] = 0.0;
  queue.push({0.0, source});
  while (!queue.empty()) {
    auto [du, u] = queue.top();
    queue.pop();
    if (du > out.dist[u]) continue;
    for (int v : graph.neighbors(u)) {
      if (v == excluded) continue;
      const double nd = du + kPi / graph.weight(u, v);
      if (nd < out.dist[v]) {
        out.dist[v] = nd;
        out.parent[v] = u;
        queue.push({nd, v});
      }
    }
  }
  return out;
}

PathPlan best_oriented_path(const HamiltonianGraph& graph, int source, int target, double abs_alpha) {
  const ChainDistances chain = chain_distances(graph, source, target);
  PathPlan best{{}, std::numeric_limits<double>::infinity()};
  int best_last = -1;
  for (int p : graph.neighbors(target)) {
    if (!std::isfinite(chain.dist[p])) continue;
    const double cost = chain.dist[p] + abs_alpha / graph.weight(p, target);
    if (cost < best.time) {
      best.time = cost;
      best_last = p;
    }
  }
  if (best_last < 0) return best;
  for (int v = best_last; v != -1; v = chain.parent[v]) best.path.push_back(v);
  std::reverse(best.path.begin(), best.path.end());
  best.path.push_back(target);
  return best;
}

void emit_rotation(PulseSchedule& schedule, const HamiltonianGraph& graph, int u, int v, double alpha) {
  if (alpha == 0.0) return;
  const complex_t g = graph.coupling(u, v);
  // D^dagger H D turns H(u, v) into |g| sign(alpha).
  DiagonalPhases frame(graph.dim());
  frame[v] = -std::arg(g) + (alpha < 0.0 ? kPi : 0.0);
  schedule.append_diagonal(frame);
  schedule.append_edge({std::min(u, v), std::max(u, v), alpha, std::abs(alpha) / std::abs(g)});
  schedule.append_diagonal(frame.inverse());
}

// Exact transposition of |u> and |v>: diag(i on u, v) * S_uv(pi/2).
void emit_transposition(PulseSchedule& schedule, const HamiltonianGraph& graph, int u, int v) {
  emit_rotation(schedule, graph, u, v, kPi / 2.0);
  DiagonalPhases fix(graph.dim());
  fix[u] = kPi / 2.0;
  fix[v] = kPi / 2.0;
  schedule.append_diagonal(fix);
}

Eigen::Matrix2cd rz(double phi) {
  Eigen::Matrix2cd r = Eigen::Matrix2cd::Zero();
  r(0, 0) = std::polar(1.0, -phi / 2.0);
  r(1, 1) = std::polar(1.0, phi / 2.0);
  return r;
}

Eigen::Matrix2cd rx(double theta) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  Eigen::Matrix2cd r;
  r << complex_t(c, 0.0), complex_t(0.0, -s), complex_t(0.0, -s), complex_t(c, 0.0);
  return r;
}

}  // namespace

std::size_t PulseSchedule::edge_evolution_count() const {
  return static_cast<std::size_t>(std::count_if(steps_.begin(), steps_.end(), [](const ScheduleStep& s) {
    return std::holds_alternative<EdgeEvolution>(s);
  }));
}

void PulseSchedule::append_diagonal(const DiagonalPhases& phases) {
  if (phases.dim() != dim_) throw std::invalid_argument("append_diagonal: dimension mismatch");
  if (!steps_.empty()) {
    if (auto* last = std::get_if<DiagonalPulse>(&steps_.back())) {
      last->phases = DiagonalPhases(RealVector(last->phases.theta() + phases.theta()));
      return;
    }
  }
  steps_.emplace_back(DiagonalPulse{phases});
}

void PulseSchedule::append_edge(const EdgeEvolution& step) {
  if (step.n < 0 || step.m >= dim_ || step.n >= step.m) {
    throw std::invalid_argument("append_edge: expected 0 <= n < m < dim");
  }
  if (step.duration < 0.0) throw std::invalid_argument("append_edge: negative duration");
  steps_.emplace_back(step);
  total_time_ += step.duration;
}

void PulseSchedule::append(const PulseSchedule& other) {
  for (const ScheduleStep& s : other.steps()) {
    if (const auto* p = std::get_if<DiagonalPulse>(&s)) {
      append_diagonal(p->phases);
    } else {
      append_edge(std::get<EdgeEvolution>(s));
    }
  }
}

double reduce_angle(double alpha, int* half_turns) {
  const double k = std::round(alpha / kPi);
  if (half_turns != nullptr) *half_turns = static_cast<int>(k);
  return alpha - k * kPi;
}

double path_cost(const HamiltonianGraph& graph, const std::vector<int>& path, double alpha) {
  if (path.size() < 2) throw std::invalid_argument("path_cost: path needs at least two vertices");
  double cost = 0.0;
  for (std::size_t j = 0; j + 2 < path.size(); ++j) {
    const double w = graph.weight(path[j], path[j + 1]);
    if (w == 0.0) throw std::invalid_argument("path_cost: consecutive vertices are not adjacent");
    cost += kPi / w;
  }
  const double last = graph.weight(path[path.size() - 2], path.back());
  if (last == 0.0) throw std::invalid_argument("path_cost: consecutive vertices are not adjacent");
  return cost + std::abs(alpha) / last;
}

PathPlan shortest_time_path(const HamiltonianGraph& graph, int n, int m, double alpha) {
  if (n == m) throw std::invalid_argument("shortest_time_path: n and m must differ");
  if (n < 0 || m < 0 || n >= graph.dim() || m >= graph.dim()) {
    throw std::out_of_range("shortest_time_path: vertex out of range");
  }
  require_connected(graph, "shortest_time_path");
  const double abs_alpha = std::abs(reduce_angle(alpha));
  PathPlan forward = best_oriented_path(graph, n, m, abs_alpha);
  PathPlan backward = best_oriented_path(graph, m, n, abs_alpha);
  PathPlan best = backward.time < forward.time ? std::move(backward) : std::move(forward);
  // S(k pi) is diagonal: nothing to evolve.
  if (abs_alpha == 0.0) best.time = 0.0;
  return best;
}

PulseSchedule swap_chain_schedule(const HamiltonianGraph& graph, int n, int m, double alpha) {
  PulseSchedule schedule(graph.dim());
  int half_turns = 0;
  const double reduced = reduce_angle(alpha, &half_turns);
  const PathPlan plan = shortest_time_path(graph, n, m, alpha);

  if (reduced != 0.0) {
    const auto& p = plan.path;
    const std::size_t last = p.size() - 1;
    // Carry p_1 next to p_N, rotate on the final edge, carry it back.
    for (std::size_t j = 0; j + 1 < last; ++j) emit_transposition(schedule, graph, p[j], p[j + 1]);
    emit_rotation(schedule, graph, p[last - 1], p[last], reduced);
    for (std::size_t j = last - 1; j-- > 0;) emit_transposition(schedule, graph, p[j], p[j + 1]);
  }
  if (half_turns % 2 != 0) {
    DiagonalPhases flip(graph.dim());
    flip[n] = kPi;
    flip[m] = kPi;
    schedule.append_diagonal(flip);
  }
  std::string path_text;
  for (int v : plan.path) path_text += (path_text.empty() ? "" : "-") + std::to_string(v + 1);
  schedule.metadata["path"] = path_text;
  return schedule;
}

ComplexMatrix TwoLevelUnitary::embed(int dim) const {
  ComplexMatrix u = ComplexMatrix::Identity(dim, dim);
  u(n, n) = block(0, 0);
  u(n, m) = block(0, 1);
  u(m, n) = block(1, 0);
  u(m, m) = block(1, 1);
  return u;
}

std::vector<TwoLevelUnitary> two_level_decompose(const ComplexMatrix& u) {
  if (!is_unitary(u)) throw LinalgError("two_level_decompose: input is not unitary");
  const int d = static_cast<int>(u.rows());
  std::vector<TwoLevelUnitary> factors;
  if (d == 1) return factors;

  ComplexMatrix w = u;
  for (int c = 0; c + 2 < d; ++c) {
    for (int r = c + 1; r < d; ++r) {
      const complex_t a = w(c, c);
      const complex_t b = w(r, c);
      const double norm = std::hypot(std::abs(a), std::abs(b));
      if (norm == 0.0) continue;
      if (std::abs(b) < 1e-15 && std::abs(std::arg(a)) < 1e-15) continue;
      // G (a, b)^T = (norm, 0)^T with det G = 1.
      Eigen::Matrix2cd g;
      g << std::conj(a) / norm, std::conj(b) / norm, -b / norm, a / norm;
      const ComplexVector row_c = w.row(c).transpose();
      const ComplexVector row_r = w.row(r).transpose();
      w.row(c) = (g(0, 0) * row_c + g(0, 1) * row_r).transpose();
      w.row(r) = (g(1, 0) * row_c + g(1, 1) * row_r).transpose();
      w(r, c) = 0.0;
      factors.push_back({c, r, g.adjoint()});
    }
  }
  Eigen::Matrix2cd last;
  last << w(d - 2, d - 2), w(d - 2, d - 1), w(d - 1, d - 2), w(d - 1, d - 1);
  factors.push_back({d - 2, d - 1, last});
  return factors;
}

Eigen::Matrix2cd EulerAngles::matrix() const {
  return std::polar(1.0, delta) * rz(a) * rx(theta) * rz(b);
}

EulerAngles euler_decompose(const Eigen::Matrix2cd& block) {
  EulerAngles out;
  out.delta = std::arg(block.determinant()) / 2.0;
  const Eigen::Matrix2cd su = std::polar(1.0, -out.delta) * block;
  const double c = std::abs(su(0, 0));
  const double s = std::abs(su(1, 0));
  out.theta = 2.0 * std::atan2(s, c);
  // su(0,0) = e^{-i(a+b)/2} c, su(1,1) = e^{i(a+b)/2} c,
  // su(1,0) = -i e^{i(a-b)/2} s, su(0,1) = -i e^{-i(a-b)/2} s.
  // Each angle is read off modulo 2 pi; the remaining sign goes into delta.
  if (s <= kMinRotation) {
    out.a = 2.0 * std::arg(su(1, 1));
    out.b = 0.0;
  } else if (c <= kMinRotation) {
    out.a = 2.0 * std::arg(su(1, 0)) + kPi;
    out.b = 0.0;
  } else {
    const double half_sum = std::arg(su(1, 1));
    const double half_diff = std::arg(su(1, 0)) + kPi / 2.0;
    out.a = half_sum + half_diff;
    out.b = half_sum - half_diff;
  }
  // The SU(2) lift is fixed only up to sign; move a sign into delta.
  const Eigen::Matrix2cd rebuilt = rz(out.a) * rx(out.theta) * rz(out.b);
  if ((rebuilt + su).norm() < (rebuilt - su).norm()) out.delta += kPi;
  return out;
}

PulseSchedule synthesize(const HamiltonianGraph& graph, const ComplexMatrix& target) {
  if (target.rows() != graph.dim() || target.cols() != graph.dim()) {
    throw LinalgError("synthesize: target dimension does not match the graph");
  }
  if (!is_unitary(target)) throw LinalgError("synthesize: target is not unitary");
  require_connected(graph, "synthesize");

  const int d = graph.dim();
  PulseSchedule schedule(d);
  schedule.metadata["elimination_order"] = "column-major; levels (c, r) for r = c+1..d-1";
  if (d == 1) {
    DiagonalPhases phase(1);
    phase[0] = std::arg(target(0, 0));
    schedule.append_diagonal(phase);
    return schedule;
  }

  const std::vector<TwoLevelUnitary> factors = two_level_decompose(target);
  // U = V_1 ... V_k: V_k acts first.
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    const EulerAngles angles = euler_decompose(it->block);
    DiagonalPhases before(d);
    before[it->n] = -angles.b / 2.0;
    before[it->m] = angles.b / 2.0;
    schedule.append_diagonal(before);
    if (angles.theta >= kMinRotation) {
      PulseSchedule chain = swap_chain_schedule(graph, it->n, it->m, angles.theta / 2.0);
      schedule.append(chain);
    }
    DiagonalPhases after(d);
    after[it->n] = -angles.a / 2.0 + angles.delta;
    after[it->m] = angles.a / 2.0 + angles.delta;
    schedule.append_diagonal(after);
  }
  schedule.metadata["two_level_factors"] = std::to_string(factors.size());
  return schedule;
}

void validate_schedule(const HamiltonianGraph& graph, const PulseSchedule& schedule) {
  if (schedule.dim() != graph.dim()) throw std::invalid_argument("schedule dimension does not match graph");
  for (const ScheduleStep& s : schedule.steps()) {
    if (const auto* e = std::get_if<EdgeEvolution>(&s)) {
      if (!graph.has_edge(e->n, e->m)) {
        throw InfeasibleError("schedule uses (" + std::to_string(e->n + 1) + "," + std::to_string(e->m + 1) +
                              "), which is not an edge of the drift graph");
      }
      const double expected = std::abs(e->alpha) / graph.weight(e->n, e->m);
      if (std::abs(expected - e->duration) > 1e-9 * std::max(1.0, expected)) {
        throw std::invalid_argument("schedule duration does not match |alpha| / |g|");
      }
    } else if (std::get<DiagonalPulse>(s).phases.dim() != graph.dim()) {
      throw std::invalid_argument("diagonal pulse dimension does not match graph");
    }
  }
}

ComplexMatrix simulate(const HamiltonianGraph& graph, const PulseSchedule& schedule, SimulationMode mode) {
  validate_schedule(graph, schedule);
  const int d = graph.dim();
  const ComplexMatrix drift = graph.to_matrix();
  std::map<std::pair<int, int>, EdgeIsolation> isolations;
  ComplexMatrix u = ComplexMatrix::Identity(d, d);
  for (const ScheduleStep& s : schedule.steps()) {
    if (const auto* p = std::get_if<DiagonalPulse>(&s)) {
      u = p->phases.diagonal().asDiagonal() * u;
      continue;
    }
    const auto& e = std::get<EdgeEvolution>(s);
    auto it = isolations.find({e.n, e.m});
    if (it == isolations.end()) it = isolations.emplace(std::pair{e.n, e.m}, isolate_edge(graph, e.n, e.m)).first;
    if (mode.trotter_steps > 0) {
      u = trotter_sequence(it->second.map, drift, e.duration, mode.trotter_steps) * u;
    } else {
      u = mat_exp_unchecked(it->second.raw, e.duration) * u;
    }
  }
  return u;
}

ComplexMatrix edge_rotation(int dim, int n, int m, double alpha) {
  ComplexMatrix s = ComplexMatrix::Identity(dim, dim);
  s(n, n) = std::cos(alpha);
  s(m, m) = std::cos(alpha);
  s(n, m) = complex_t(0.0, -std::sin(alpha));
  s(m, n) = complex_t(0.0, -std::sin(alpha));
  return s;
}

}  // namespace gatetime
