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

#include <cstdint>
#include <string>
#include <vector>

namespace gatetime {

using FieldArray = Eigen::MatrixXd;  // d x num_slices, f_n on slice k

struct GrapeConfig {
  int num_slices = 64;
  int max_iters = 2000;
  double error_threshold = 1e-4;
  /// Population size: independent random initializations per time T.
  int restarts = 8;
  /// Bisection width for the time search, in units of 1/g_min.
  double t_resolution = 0.01;
  double field_init_scale = 1.0;
  std::uint64_t seed = 1;
  /// A run stops early once the error has shrunk by less than
  /// stall_factor over stall_window iterations.
  int stall_window = 50;
  double stall_factor = 0.99;
  int lbfgs_memory = 10;

  void validate() const;
};

struct GrapeResult {
  double total_time = 0.0;
  FieldArray fields;
  double final_error = 1.0;
  bool converged = false;
  int iterations = 0;
  /// Population member that produced this result.
  int member = 0;
};

/// Product of slice propagators exp(-i (H0 + sum_n f_n P_n) dt), dt = T / N,
/// applied in time order.
ComplexMatrix propagate(const ControlSystem& system, const FieldArray& fields, double total_time);

struct ErrorAndGradient {
  double error = 1.0;
  FieldArray gradient;  // d(error) / d f_{n,k}
};

/// Gate error 1 - |Tr(U_g^dagger U(T))|^2 / d^2 and its exact gradient with
/// respect to every field value, using the eigendecomposition of each slice
/// Hamiltonian.
ErrorAndGradient error_and_gradient(const ControlSystem& system, const ComplexMatrix& target,
                                    const FieldArray& fields, double total_time);

/// Optimizes from a given initial field array (one population member).
GrapeResult grape_run(const ControlSystem& system, const ComplexMatrix& target, double total_time,
                      FieldArray initial, const GrapeConfig& config);

/// Initial fields of population member `member`: i.i.d. normal times
/// field_init_scale, seeded by (config.seed, member).
FieldArray initial_fields(int dim, const GrapeConfig& config, int member);

/// Runs the full population and returns the best member (lowest error,
/// ties to the lowest index).
GrapeResult grape_optimize(const ControlSystem& system, const ComplexMatrix& target, double total_time,
                           const GrapeConfig& config);

struct TimeProbe {
  double total_time = 0.0;
  bool success = false;
  double best_error = 1.0;
};

struct MinimumTimeResult {
  bool found = false;
  double t_min = 0.0;
  GrapeResult result;
  /// Every time probed, in order.
  std::vector<TimeProbe> probes;
  /// Upper cap of the scan, pi d^2 (d - 1) / (2 g_min).
  double cap = 0.0;
};

/// Success at T means at least one population member converged. Scans
/// T = r, 2r, 4r, ... (r = t_resolution / g_min) until success or the cap,
/// then bisects between the last failure and the first success down to r.
/// found == false signals a failure at the cap.
MinimumTimeResult minimum_time_search(const ControlSystem& system, const ComplexMatrix& target,
                                      const GrapeConfig& config);

/// True if some population member converges at T; members are tried in
/// index order and the first converged one is returned in `result`.
bool population_succeeds(const ControlSystem& system, const ComplexMatrix& target, double total_time,
                         const GrapeConfig& config, GrapeResult* result = nullptr);

}  // namespace gatetime
