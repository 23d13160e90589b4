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
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gatetime {

// Closed-form time bounds. Times are in units of 1/energy; every formula
// that takes g_min rejects g_min <= 0.

/// (|alpha| + pi (d - 2)) / g_min: time to realize S_nm(alpha) for any pair.
double upper_bound_edge(int d, double alpha, double g_min);

/// pi d^2 (d - 1) / (2 g_min): time to realize any U in U(d).
double upper_bound_unitary(int d, double g_min);

struct QubitCoupling {
  int i = 0;
  int j = 0;
  /// Magnitudes |g_{alpha,beta}| over alpha, beta in {x, y, z}; zeros allowed.
  std::vector<double> magnitudes;
};

/// n-qubit network with two-body couplings. Splittings are carried along
/// but never enter the bounds.
struct QubitNetworkSpec {
  int n = 0;
  std::vector<QubitCoupling> couplings;
  std::vector<double> splittings;

  /// Smallest nonzero coupling magnitude.
  double g_min() const;
  /// Geodesic (edge-count) distance; nullopt if i and j are disconnected.
  std::optional<int> distance(int i, int j) const;

  static QubitNetworkSpec path(int n, double g = 1.0);
  static QubitNetworkSpec star(int n, double g = 1.0);
};

/// (pi / g_min) (4 dist(i, j) - 3) / 4. Throws InfeasibleError if the pair
/// is disconnected.
double cnot_bound(const QubitNetworkSpec& spec, int i, int j);
/// Same formula from an explicit distance.
double cnot_bound_from_distance(int dist, double g_min);

/// pi (4n - 7) / (4 g_min) * n_cnot.
double unitary_qubit_bound(int n, double g_min, std::int64_t n_cnot);

struct TightBindingBounds {
  double lower = 0.0;  // sqrt(2) (d - 1)
  double upper = 0.0;  // (pi / 2) (2d - 3) sqrt(2 (d - 1))
};

TightBindingBounds tb_bounds(int d);

/// S(x) = (1 - cos(sum x)) / (1 - mean(cos x)).
///
/// Returns nullopt when the denominator is below 1e-12 and x is not uniform.
/// For uniform x with a vanishing denominator the ray limit (d-1)^2 is
/// returned, d - 1 = x.size().
std::optional<double> s_function(std::span<const double> x);

struct LowerBoundResult {
  /// max over diagonal V of ||[U, V]|| / ||[H0, V]|| (Hilbert-Schmidt).
  double value = 0.0;
  /// [H0, V] = 0 with [U, V] != 0 for some diagonal V.
  bool infinite = false;
  /// Value of the V -> 1 limit, maximized over approach directions.
  double limit_value = 0.0;
  /// Best ratio found at interior points, ||[H0, V]|| >= 1e-9.
  double interior_value = 0.0;
  /// Phases of the best interior point.
  DiagonalPhases best_phases;
  /// Interior search beat the V -> 1 limit by more than 1e-6.
  bool interior_exceeds_limit = false;
};

struct LowerBoundOptions {
  int starts = 50;
  double theta_tolerance = 1e-8;
  /// Objective evaluations per start, times (d - 1). Bounds the slow creep
  /// towards the V -> 1 supremum, which is evaluated exactly instead.
  int evaluations_per_dim = 4000;
  std::uint64_t seed = 7;
};

LowerBoundResult variational_lower_bound(const ComplexMatrix& target, const ComplexMatrix& drift,
                                         const LowerBoundOptions& options = {});

enum class FormulaId {
  kEdgeUpper,
  kUnitaryUpper,
  kCnotUpper,
  kQubitUnitaryUpper,
  kSingleEdgeG1,
  kGeneralG1,
  kTbUpper,
  kTbLower,
  kVariationalLower,
};

std::string to_string(FormulaId id);
FormulaId formula_from_string(const std::string& name);

struct BoundReport {
  FormulaId formula = FormulaId::kUnitaryUpper;
  std::map<std::string, double> inputs;
  double value = 0.0;
};

/// Evaluates a closed-form formula from named parameters. Required
/// parameters per formula:
///   edge_upper: d, alpha, g_min        unitary_upper: d, g_min
///   cnot_upper: dist, g_min            qubit_unitary_upper: n, g_min, n_cnot
///   single_edge_g1: d                  general_g1: d
///   tb_upper, tb_lower: d
/// variational_lower needs matrices and is evaluated through
/// variational_lower_bound instead. Throws std::invalid_argument on missing
/// or invalid parameters.
BoundReport evaluate_bound(FormulaId id, const std::map<std::string, double>& params);

}  // namespace gatetime
