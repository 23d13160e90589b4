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
#include "gatetime/grape.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace gatetime {

/// One minimum-time search inside a figure pipeline.
struct ExperimentRecord {
  int d = 0;
  std::uint64_t graph_id = 0;  // canonical adjacency code
  int trial = 0;
  std::uint64_t seed = 0;
  std::string target;
  double t_grape = 0.0;
  double lower_bound = 0.0;
  double upper_bound = 0.0;
  bool found = false;
  /// lower - slack <= t_grape <= upper fails, or the search failed.
  bool violation = false;
};

struct AggregateRow {
  int d = 0;
  int trials = 0;
  double avg_t = 0.0;
  double max_t = 0.0;
  double bound = 0.0;
  /// Only meaningful for the tight-binding pipeline.
  double lower = 0.0;
};

struct ExperimentTable {
  std::string name;
  std::vector<AggregateRow> rows;
  std::vector<ExperimentRecord> records;
  std::vector<ExperimentRecord> violations;
  std::map<std::string, std::string> metadata;

  void write_summary_csv(std::ostream& os) const;
  void write_trials_csv(std::ostream& os) const;
};

struct ExperimentOptions {
  int d_min = 2;
  int d_max = 4;
  int trials_per_graph = 10;
  std::uint64_t seed = 1;
  GrapeConfig grape;
  /// Worker threads for independent trials; results do not depend on it.
  int jobs = 1;
  /// Called after each finished trial, for progress logging.
  std::function<void(const ExperimentRecord&)> on_record;
};

/// Tight-binding chain, target S_{1,d}(pi/2), closed-form bounds.
ExperimentTable exp_fig1(const ExperimentOptions& options);

/// Random single-edge rotations S_nm(alpha) on every connected graph with
/// U[1, 2] weights; bound pi (d - 3/2).
ExperimentTable exp_fig2(const ExperimentOptions& options);

/// Random unitaries exp(-iH), H from the Gaussian unitary ensemble, on every
/// connected graph with U[1, 2] weights; bound (pi / 2) d^2 (d - 1).
ExperimentTable exp_fig3(const ExperimentOptions& options);

/// exp(-i H) with H Hermitian: standard complex Gaussian off-diagonals,
/// real standard Gaussian diagonal.
ComplexMatrix random_gue_unitary(int d, std::uint64_t seed);

}  // namespace gatetime
