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

// Slow brute-force cross-checks for the planner and the time search.

#include "gatetime/grape.hpp"
#include "gatetime/synthesis.hpp"

#include <optional>

namespace gatetime {

/// Minimum path_cost over every simple path between n and m, in both
/// orientations. Exponential in d; meant for d <= 7.
PathPlan exhaustive_shortest_path(const HamiltonianGraph& graph, int n, int m, double alpha);

struct TimeScan {
  /// First scanned time at which the population succeeds.
  std::optional<double> first_success;
  int probes = 0;
};

/// Probes T = step, 2 step, ... up to t_max and stops at the first success.
TimeScan fine_time_scan(const ControlSystem& system, const ComplexMatrix& target, const GrapeConfig& config,
                        double step, double t_max);

}  // namespace gatetime
