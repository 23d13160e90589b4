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

#include "gatetime/oracles.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace gatetime {

namespace {

void extend(const HamiltonianGraph& graph, int target, double alpha, std::vector<int>& path,
            std::vector<bool>& used, PathPlan& best) {
  const int tail = path.back();
  for (int v : graph.neighbors(tail)) {
    if (used[v]) continue;
    path.push_back(v);
    if (v == target) {
      const double cost = path_cost(graph, path, alpha);
      if (cost < best.time) best = {path, cost};
    } else {
      used[v] = true;
      extend(graph, target, alpha, path, used, best);
      used[v] = false;
    }
    path.pop_back();
  }
}

}  // namespace

PathPlan exhaustive_shortest_path(const HamiltonianGraph& graph, int n, int m, double alpha) {
  if (n == m) throw std::invalid_argument("exhaustive_shortest_path: n and m must differ");
  const double reduced = std::abs(reduce_angle(alpha));
  PathPlan best{{}, std::numeric_limits<double>::infinity()};
  for (auto [from, to] : {std::pair{n, m}, std::pair{m, n}}) {
    std::vector<int> path{from};
    std::vector<bool> used(graph.dim(), false);
    used[from] = true;
    extend(graph, to, reduced, path, used, best);
  }
  if (best.path.empty()) throw InfeasibleError("exhaustive_shortest_path: no path between the vertices");
  if (reduced == 0.0) best.time = 0.0;
  return best;
}

TimeScan fine_time_scan(const ControlSystem& system, const ComplexMatrix& target, const GrapeConfig& config,
                        double step, double t_max) {
  if (!(step > 0.0) || !(t_max >= step)) throw std::invalid_argument("fine_time_scan: need 0 < step <= t_max");
  TimeScan scan;
  for (int k = 1; k * step <= t_max + 1e-12; ++k) {
    ++scan.probes;
    if (population_succeeds(system, target, k * step, config)) {
      scan.first_success = k * step;
      break;
    }
  }
  return scan;
}

}  // namespace gatetime
