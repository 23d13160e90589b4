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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include "gatetime/bounds.hpp"
#include "gatetime/decoupling.hpp"
#include "gatetime/experiments.hpp"
#include "gatetime/grape.hpp"
#include "gatetime/oracles.hpp"
#include "gatetime/synthesis.hpp"
#include "test_util.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <numbers>
#include <queue>
#include <sstream>
#include <string>

using namespace gatetime;

namespace {

constexpr double kPi = std::numbers::pi;

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

// Labeled random graph, edges kept with probability 1/2, resampled until
// connected; weights U[1, 2].
HamiltonianGraph random_connected(int d, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  while (true) {
    HamiltonianGraph g(d);
    for (int a = 0; a < d; ++a)
      for (int b = a + 1; b < d; ++b)
        if (u(rng) < 0.5) g.set_coupling(a, b, 1.0 + u(rng));
    if (g.edge_count() > 0 && g.is_connected()) return g;
  }
}

std::vector<HamiltonianGraph> instance_suite(int d, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<HamiltonianGraph> out;
  for (int k = 0; k < count; ++k) out.push_back(random_connected(d, rng));
  return out;
}

// ---------------------------------------------------------------------------

void criterion1(Verdict& v) {
  for (int d = 2; d <= 6; ++d) {
    v.require(close(upper_bound_unitary(d, 1.0), kPi / 2.0 * d * d * (d - 1), 1e-12), "unitary d=" + std::to_string(d));
    v.require(close(upper_bound_edge(d, kPi / 2.0, 1.0), kPi * (d - 1.5), 1e-12), "edge d=" + std::to_string(d));
    const TightBindingBounds b = tb_bounds(d);
    v.require(close(b.lower, std::sqrt(2.0) * (d - 1), 1e-12), "tb lower d=" + std::to_string(d));
    v.require(close(b.upper, kPi / 2.0 * (2 * d - 3) * std::sqrt(2.0 * (d - 1)), 1e-12),
              "tb upper d=" + std::to_string(d));
  }
  v.detail << "d=2..6 closed forms";
}

void criterion2(Verdict& v) {
  std::mt19937_64 rng(2002);
  int cases = 0;
  int violations = 0;
  double worst_error = 0.0;
  for (int d = 2; d <= 5; ++d) {
    for (const HamiltonianGraph& g : instance_suite(d, 20, 1000 + d)) {
      for (int t = 0; t < 5; ++t) {
        const ComplexMatrix target = testing::random_unitary(d, rng);
        const PulseSchedule s = synthesize(g, target);
        const double err = gate_error(target, simulate(g, s, SimulationMode::ideal()));
        worst_error = std::max(worst_error, err);
        const bool ok = err < 1e-9 && s.total_time() <= kPi * d * d * (d - 1) / 2.0 &&
                        s.total_time() <= upper_bound_unitary(d, g.g_min()) + 1e-12;
        if (!ok) ++violations;
        ++cases;
      }
    }
  }
  v.require(violations == 0, std::to_string(violations) + " violations");
  v.detail << cases << " synth cases, worst gate error " << worst_error << ", violations " << violations;
}

void criterion3(Verdict& v) {
  std::mt19937_64 rng(3003);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  int chains = 0;
  int oracle_checks = 0;
  for (int d = 2; d <= 6; ++d) {
    for (const HamiltonianGraph& g : instance_suite(d, 20, 1000 + d)) {
      for (int n = 0; n < d; ++n) {
        for (int m = n + 1; m < d; ++m) {
          const double alpha = angle(rng);
          const PathPlan plan = shortest_time_path(g, n, m, alpha);
          const PathPlan slow = exhaustive_shortest_path(g, n, m, alpha);
          v.require(close(plan.time, slow.time, 1e-12), "exhaustive mismatch");
          ++oracle_checks;
          if (d > 5) continue;
          const PulseSchedule s = swap_chain_schedule(g, n, m, alpha);
          v.require(close(s.total_time(), plan.time, 1e-12), "schedule time != path cost");
          v.require(s.total_time() <= upper_bound_edge(d, reduce_angle(alpha), g.g_min()) + 1e-12, "edge upper bound");
          v.require(testing::max_abs_diff(simulate(g, s), edge_rotation(d, n, m, alpha)) < 1e-9, "chain unitary");
          ++chains;
        }
      }
    }
  }
  v.detail << chains << " swap chains, " << oracle_checks << " exhaustive path checks (d<=6)";
}

void criterion4(Verdict& v) {
  int isolations = 0;
  for (int d = 2; d <= 6; ++d) {
    for (const HamiltonianGraph& g : instance_suite(d, 20, 4000 + d)) {
      for (const Edge& e : g.edges()) {
        const EdgeIsolation iso = isolate_edge(g, e.n, e.m);
        int surviving = 0;
        for (int a = 0; a < d; ++a)
          for (int b = a + 1; b < d; ++b)
            if (std::abs(iso.raw(a, b)) > 1e-12) ++surviving;
        v.require(surviving == 1, "surviving edge count");
        v.require(std::abs(std::abs(iso.raw(e.n, e.m)) - e.weight()) <= 1e-12, "surviving weight");
        v.require(testing::max_abs_diff(iso.effective.matrix, e.weight() * edge_operator(d, e.n, e.m)) <= 1e-12,
                  "effective Hamiltonian");
        ++isolations;
      }
    }
  }
  const HamiltonianGraph g = instance_suite(4, 1, 4444)[0];
  const Edge e = g.edges().front();
  const EdgeIsolation iso = isolate_edge(g, e.n, e.m);
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int count = 0;
  for (int n = 32; n <= 512; n *= 2) {
    const double x = std::log(n), y = std::log(trotter_error(iso.map, g.to_matrix(), 1.0, n));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++count;
  }
  const double slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
  v.require(slope >= -1.3 && slope <= -0.7, "Trotter slope");
  v.detail << isolations << " isolations; Trotter log-log slope " << slope << " (d=4, n=32..512)";
}

void criterion5(Verdict& v) {
  for (int d = 2; d <= 6; ++d) {
    const std::vector<double> zeros(d - 1, 0.0);
    const auto s = s_function(zeros);
    v.require(s && std::abs(*s - (d - 1.0) * (d - 1.0)) <= 1e-6, "uniform limit d=" + std::to_string(d));
  }
  v.detail << "S limit ok d=2..6; lower bound / sqrt2(d-1):";
  for (int d = 3; d <= 5; ++d) {
    const LowerBoundResult r =
        variational_lower_bound(edge_rotation(d, 0, d - 1, kPi / 2.0), tight_binding(d).to_matrix());
    const double target = std::sqrt(2.0) * (d - 1);
    v.require(!r.infinite && r.value >= 0.999 * target, "variational d=" + std::to_string(d));
    v.detail << " d=" << d << ":" << r.value / target;
  }
}

void criterion6(Verdict& v) {
  HamiltonianGraph g(2);
  g.set_coupling(0, 1, 1.0);
  const ControlSystem sys(g);
  const ComplexMatrix target = edge_rotation(2, 0, 1, kPi / 2.0);
  const GrapeConfig config;
  const MinimumTimeResult search = minimum_time_search(sys, target, config);
  v.require(search.found, "search failed");
  const TimeScan scan = fine_time_scan(sys, target, config, config.t_resolution, 2.0 * kPi);
  v.require(scan.first_success.has_value(), "fine scan found nothing");
  const double oracle = scan.first_success.value_or(0.0);
  v.require(std::abs(search.t_min - kPi / 2.0) <= 0.1 * kPi / 2.0, "T_min not within 10% of pi/2");
  v.require(std::abs(oracle - kPi / 2.0) <= 0.1 * kPi / 2.0, "fine scan not within 10% of pi/2");
  v.require(std::abs(search.t_min - oracle) <= 2.0 * config.t_resolution, "search disagrees with fine scan");

  std::mt19937_64 rng(6006);
  std::normal_distribution<double> normal(0.0, 1.0);
  double worst = 0.0;
  for (int instance = 0; instance < 10; ++instance) {
    const int d = 2 + instance % 3;
    const ControlSystem s(random_connected(d, rng));
    const ComplexMatrix u = testing::random_unitary(d, rng);
    FieldArray f(d, 8);
    for (int r = 0; r < d; ++r)
      for (int k = 0; k < 8; ++k) f(r, k) = normal(rng);
    const double t = 1.0 + instance * 0.2;
    const ErrorAndGradient eg = error_and_gradient(s, u, f, t);
    FieldArray fd(d, 8);
    const double h = 1e-6;
    for (int r = 0; r < d; ++r) {
      for (int k = 0; k < 8; ++k) {
        FieldArray p = f, m = f;
        p(r, k) += h;
        m(r, k) -= h;
        fd(r, k) = (gate_error(u, propagate(s, p, t)) - gate_error(u, propagate(s, m, t))) / (2.0 * h);
      }
    }
    worst = std::max(worst, (eg.gradient - fd).norm() / fd.norm());
  }
  v.require(worst < 1e-4, "gradient mismatch");
  v.detail << "T_min " << search.t_min << ", fine scan " << oracle << " (pi/2 = " << kPi / 2.0
           << "); worst gradient rel. error " << worst;
}

GrapeConfig figure_config() {
  GrapeConfig c;
  c.num_slices = 32;
  c.restarts = 4;
  c.max_iters = 500;
  return c;
}

void criterion7(Verdict& v) {
  ExperimentOptions o;
  o.seed = 2026;
  o.grape = figure_config();

  o.d_min = 2;
  o.d_max = 5;
  const ExperimentTable f1 = exp_fig1(o);
  for (const auto& r : f1.records) {
    const TightBindingBounds b = tb_bounds(r.d);
    v.require(r.found && r.t_grape >= b.lower && r.t_grape <= b.upper, "fig1 d=" + std::to_string(r.d));
  }
  v.require(f1.violations.empty(), "fig1 violations");
  v.detail << "fig1 T:";
  for (const auto& r : f1.records) v.detail << " " << r.t_grape;

  o.d_max = 4;
  const ExperimentTable f2 = exp_fig2(o);
  for (const auto& row : f2.rows) v.require(row.max_t <= kPi * (row.d - 1.5), "fig2 max_T d=" + std::to_string(row.d));
  v.require(f2.violations.empty(), "fig2 violations");
  v.detail << "; fig2 max_T/bound:";
  for (const auto& row : f2.rows) v.detail << " " << row.max_t / row.bound;

  o.d_max = 3;
  const ExperimentTable f3 = exp_fig3(o);
  for (const auto& row : f3.rows) {
    v.require(row.max_t <= kPi / 2.0 * row.d * row.d * (row.d - 1), "fig3 max_T d=" + std::to_string(row.d));
  }
  v.require(f3.violations.empty(), "fig3 violations");
  v.detail << "; fig3 max_T/bound:";
  for (const auto& row : f3.rows) v.detail << " " << row.max_t / row.bound;
  v.detail << "; runs " << f1.records.size() + f2.records.size() + f3.records.size();
}

// Independent BFS over an explicit adjacency list.
int bfs_distance(int n, const std::vector<std::pair<int, int>>& edges, int s, int t) {
  std::vector<int> dist(n, -1);
  std::queue<int> q;
  dist[s] = 0;
  q.push(s);
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (auto [a, b] : edges) {
      for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
        if (x == u && dist[y] < 0) {
          dist[y] = dist[u] + 1;
          q.push(y);
        }
      }
    }
  }
  return dist[t];
}

void criterion8(Verdict& v) {
  int checks = 0;
  for (double g : {1.0, 0.5}) {
    for (bool star : {false, true}) {
      const QubitNetworkSpec spec = star ? QubitNetworkSpec::star(5, g) : QubitNetworkSpec::path(5, g);
      std::vector<std::pair<int, int>> edges;
      for (const auto& c : spec.couplings) edges.emplace_back(c.i, c.j);
      for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
          if (i == j) continue;
          const int dist = bfs_distance(5, edges, i, j);
          v.require(close(cnot_bound(spec, i, j), kPi / g * (4.0 * dist - 3.0) / 4.0, 1e-12), "cnot bound");
          ++checks;
        }
      }
    }
    for (std::int64_t n_cnot : {0, 1, 7, 100}) {
      v.require(close(unitary_qubit_bound(5, g, n_cnot), kPi * (4.0 * 5 - 7.0) / (4.0 * g) * n_cnot, 1e-12),
                "qubit unitary bound");
      ++checks;
    }
  }
  v.detail << checks << " closed-form checks on 5-qubit path and star";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Verdict&)>>> criteria{
      {"bound formula fidelity", criterion1},   {"constructive synthesis", criterion2},
      {"swap-chain planner", criterion3},       {"decoupling", criterion4},
      {"variational lower bound", criterion5},  {"GRAPE sanity", criterion6},
      {"figure reproduction", criterion7},      {"qubit bounds", criterion8},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[k].second(v);
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!v.pass) ++failures;
    std::printf("criterion %zu (%s): %s [%.1fs] %s\n", k + 1, criteria[k].first, v.pass ? "PASS" : "FAIL", seconds,
                v.detail.str().c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
