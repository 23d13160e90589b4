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

#include "gatetime/bounds.hpp"

#include "gatetime/graph.hpp"
#include "gatetime/random.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <stdexcept>

namespace gatetime {

namespace {

constexpr double kPi = std::numbers::pi;

void require_positive_g(double g_min) {
  if (!(g_min > 0.0)) throw std::invalid_argument("g_min must be > 0");
}

void require_dim(int d) {
  if (d < 2) throw std::invalid_argument("d must be >= 2");
}

double require_param(const std::map<std::string, double>& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) throw std::invalid_argument("missing parameter '" + key + "'");
  return it->second;
}

int require_int_param(const std::map<std::string, double>& params, const std::string& key) {
  const double v = require_param(params, key);
  if (v != std::round(v)) throw std::invalid_argument("parameter '" + key + "' must be an integer");
  return static_cast<int>(v);
}

// Symmetric pair weights w_ab = |A_ab|^2 + |A_ba|^2, so that
// ||[A, diag(e^{i theta})]||^2 = sum_{a<b} w_ab * 2 (1 - cos(theta_a - theta_b)).
Eigen::MatrixXd pair_weights(const ComplexMatrix& a) {
  const Eigen::Index d = a.rows();
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = r + 1; c < d; ++c) w(r, c) = std::norm(a(r, c)) + std::norm(a(c, r));
  }
  return w;
}

Eigen::MatrixXd laplacian(const Eigen::MatrixXd& w) {
  const Eigen::Index d = w.rows();
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = r + 1; c < d; ++c) {
      l(r, r) += w(r, c);
      l(c, c) += w(r, c);
      l(r, c) -= w(r, c);
      l(c, r) -= w(r, c);
    }
  }
  return l;
}

double commutator_sq(const Eigen::MatrixXd& w, const RealVector& theta) {
  double acc = 0.0;
  for (Eigen::Index r = 0; r < w.rows(); ++r) {
    for (Eigen::Index c = r + 1; c < w.cols(); ++c) {
      if (w(r, c) == 0.0) continue;
      const double s = std::sin((theta[r] - theta[c]) / 2.0);
      acc += w(r, c) * 4.0 * s * s;
    }
  }
  return acc;
}

constexpr double kDenominatorFloor = 1e-9;

// Ratio at an interior point; -1 marks the excluded 0/0 neighbourhood.
double interior_ratio(const Eigen::MatrixXd& wu, const Eigen::MatrixXd& wh, const RealVector& theta) {
  const double den = std::sqrt(commutator_sq(wh, theta));
  if (den < kDenominatorFloor) return -1.0;
  return std::sqrt(commutator_sq(wu, theta)) / den;
}

}  // namespace

double upper_bound_edge(int d, double alpha, double g_min) {
  require_dim(d);
  require_positive_g(g_min);
  return (std::abs(alpha) + kPi * (d - 2)) / g_min;
}

double upper_bound_unitary(int d, double g_min) {
  require_dim(d);
  require_positive_g(g_min);
  return kPi * d * d * (d - 1) / (2.0 * g_min);
}

double QubitNetworkSpec::g_min() const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& c : couplings) {
    for (double m : c.magnitudes) {
      if (std::abs(m) > 0.0) best = std::min(best, std::abs(m));
    }
  }
  if (!std::isfinite(best)) throw std::invalid_argument("qubit network has no nonzero coupling");
  return best;
}

std::optional<int> QubitNetworkSpec::distance(int i, int j) const {
  if (i < 0 || j < 0 || i >= n || j >= n) throw std::out_of_range("qubit index out of range");
  std::vector<std::vector<int>> adj(n);
  for (const auto& c : couplings) {
    const bool active = std::any_of(c.magnitudes.begin(), c.magnitudes.end(), [](double m) { return m != 0.0; });
    if (!active) continue;
    adj[c.i].push_back(c.j);
    adj[c.j].push_back(c.i);
  }
  std::vector<int> dist(n, -1);
  std::queue<int> q;
  dist[i] = 0;
  q.push(i);
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int v : adj[u]) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
    }
  }
  if (dist[j] < 0) return std::nullopt;
  return dist[j];
}

QubitNetworkSpec QubitNetworkSpec::path(int n, double g) {
  QubitNetworkSpec spec{n, {}, std::vector<double>(3 * n, 0.0)};
  for (int i = 0; i + 1 < n; ++i) spec.couplings.push_back({i, i + 1, {g}});
  return spec;
}

QubitNetworkSpec QubitNetworkSpec::star(int n, double g) {
  QubitNetworkSpec spec{n, {}, std::vector<double>(3 * n, 0.0)};
  for (int i = 1; i < n; ++i) spec.couplings.push_back({0, i, {g}});
  return spec;
}

double cnot_bound_from_distance(int dist, double g_min) {
  if (dist < 1) throw std::invalid_argument("cnot_bound: distance must be >= 1");
  require_positive_g(g_min);
  return (kPi / g_min) * (4.0 * dist - 3.0) / 4.0;
}

double cnot_bound(const QubitNetworkSpec& spec, int i, int j) {
  if (i == j) throw std::invalid_argument("cnot_bound: qubits must differ");
  const auto dist = spec.distance(i, j);
  if (!dist) throw InfeasibleError("cnot_bound: qubits are not connected");
  return cnot_bound_from_distance(*dist, spec.g_min());
}

double unitary_qubit_bound(int n, double g_min, std::int64_t n_cnot) {
  if (n < 2) throw std::invalid_argument("unitary_qubit_bound: n must be >= 2");
  if (n_cnot < 0) throw std::invalid_argument("unitary_qubit_bound: n_cnot must be >= 0");
  require_positive_g(g_min);
  return kPi * (4.0 * n - 7.0) / (4.0 * g_min) * static_cast<double>(n_cnot);
}

TightBindingBounds tb_bounds(int d) {
  require_dim(d);
  return {std::sqrt(2.0) * (d - 1), kPi / 2.0 * (2.0 * d - 3.0) * std::sqrt(2.0 * (d - 1))};
}

std::optional<double> s_function(std::span<const double> x) {
  if (x.empty()) throw std::invalid_argument("s_function: need at least one angle");
  const double k = static_cast<double>(x.size());
  // 1 - cos(y) = 2 sin^2(y / 2) avoids cancellation near the 0/0 point.
  auto one_minus_cos = [](double y) {
    const double s = std::sin(y / 2.0);
    return 2.0 * s * s;
  };
  double sum = 0.0;
  double den = 0.0;
  for (double xi : x) {
    sum += xi;
    den += one_minus_cos(xi);
  }
  den /= k;
  if (den < 1e-12) {
    const bool uniform = std::all_of(x.begin(), x.end(), [&](double xi) { return xi == x[0]; });
    if (uniform) return k * k;
    return std::nullopt;
  }
  return one_minus_cos(sum) / den;
}

LowerBoundResult variational_lower_bound(const ComplexMatrix& target, const ComplexMatrix& drift,
                                         const LowerBoundOptions& options) {
  if (target.rows() != drift.rows() || target.cols() != drift.cols() || target.rows() != target.cols()) {
    throw LinalgError("variational_lower_bound: dimension mismatch");
  }
  if (!is_hermitian(drift)) throw LinalgError("variational_lower_bound: drift is not Hermitian");
  const int d = static_cast<int>(target.rows());
  LowerBoundResult out;
  out.best_phases = DiagonalPhases(d);
  if (d == 1) return out;

  const Eigen::MatrixXd wu = pair_weights(target);
  const Eigen::MatrixXd wh = pair_weights(drift);

  // V -> 1 along direction theta: the squared ratio tends to the Rayleigh
  // quotient theta^T L_U theta / theta^T L_H theta on the complement of 1.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> complement(laplacian(Eigen::MatrixXd::Ones(d, d)));
  const Eigen::MatrixXd q = complement.eigenvectors().rightCols(d - 1);
  const Eigen::MatrixXd a = q.transpose() * laplacian(wu) * q;
  const Eigen::MatrixXd b = q.transpose() * laplacian(wh) * q;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> bsolve(b);
  const double scale = std::max({1.0, b.norm(), a.norm()});
  std::vector<Eigen::Index> range;
  for (Eigen::Index k = 0; k < bsolve.eigenvalues().size(); ++k) {
    const Eigen::VectorXd vk = bsolve.eigenvectors().col(k);
    if (bsolve.eigenvalues()[k] > 1e-12 * scale) {
      range.push_back(k);
    } else if (vk.dot(a * vk) > 1e-12 * scale) {
      out.infinite = true;
    }
  }
  if (out.infinite) {
    out.value = out.limit_value = std::numeric_limits<double>::infinity();
    return out;
  }
  if (!range.empty()) {
    // Whitened quotient restricted to the range of B.
    Eigen::MatrixXd whiten(d - 1, static_cast<Eigen::Index>(range.size()));
    for (std::size_t k = 0; k < range.size(); ++k) {
      whiten.col(static_cast<Eigen::Index>(k)) =
          bsolve.eigenvectors().col(range[k]) / std::sqrt(bsolve.eigenvalues()[range[k]]);
    }
    const Eigen::MatrixXd reduced = whiten.transpose() * a * whiten;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> rsolve(reduced);
    out.limit_value = std::sqrt(std::max(0.0, rsolve.eigenvalues().maxCoeff()));
  }

  // Interior multi-start compass search over theta_1..theta_{d-1} (theta_0 = 0).
  Rng rng(options.seed);
  double best = -1.0;
  RealVector best_theta = RealVector::Zero(d);
  for (int start = 0; start < options.starts; ++start) {
    RealVector theta(d);
    theta[0] = 0.0;
    for (int k = 1; k < d; ++k) theta[k] = rng.uniform(0.0, 2.0 * kPi);
    double value = interior_ratio(wu, wh, theta);
    long budget = static_cast<long>(options.evaluations_per_dim) * (d - 1);
    for (double step = kPi / 2.0; step >= options.theta_tolerance && budget > 0;) {
      bool improved = false;
      for (int k = 1; k < d; ++k) {
        for (double sign : {1.0, -1.0}) {
          RealVector trial = theta;
          trial[k] += sign * step;
          const double v = interior_ratio(wu, wh, trial);
          --budget;
          if (v > value) {
            value = v;
            theta = std::move(trial);
            improved = true;
          }
        }
      }
      if (!improved) step /= 2.0;
    }
    if (value > best) {
      best = value;
      best_theta = theta;
    }
  }
  out.interior_value = std::max(0.0, best);
  out.best_phases = DiagonalPhases(best_theta);
  out.interior_exceeds_limit = out.interior_value > out.limit_value + 1e-6;
  out.value = std::max(out.limit_value, out.interior_value);
  return out;
}

std::string to_string(FormulaId id) {
  switch (id) {
    case FormulaId::kEdgeUpper: return "edge_upper";
    case FormulaId::kUnitaryUpper: return "unitary_upper";
    case FormulaId::kCnotUpper: return "cnot_upper";
    case FormulaId::kQubitUnitaryUpper: return "qubit_unitary_upper";
    case FormulaId::kSingleEdgeG1: return "single_edge_g1";
    case FormulaId::kGeneralG1: return "general_g1";
    case FormulaId::kTbUpper: return "tb_upper";
    case FormulaId::kTbLower: return "tb_lower";
    case FormulaId::kVariationalLower: return "variational_lower";
  }
  return "unknown";
}

FormulaId formula_from_string(const std::string& name) {
  for (FormulaId id : {FormulaId::kEdgeUpper, FormulaId::kUnitaryUpper, FormulaId::kCnotUpper,
                       FormulaId::kQubitUnitaryUpper, FormulaId::kSingleEdgeG1, FormulaId::kGeneralG1,
                       FormulaId::kTbUpper, FormulaId::kTbLower, FormulaId::kVariationalLower}) {
    if (to_string(id) == name) return id;
  }
  throw std::invalid_argument("unknown formula '" + name + "'");
}

BoundReport evaluate_bound(FormulaId id, const std::map<std::string, double>& params) {
  BoundReport report{id, params, 0.0};
  switch (id) {
    case FormulaId::kEdgeUpper:
      report.value = upper_bound_edge(require_int_param(params, "d"), require_param(params, "alpha"),
                                      require_param(params, "g_min"));
      break;
    case FormulaId::kUnitaryUpper:
      report.value = upper_bound_unitary(require_int_param(params, "d"), require_param(params, "g_min"));
      break;
    case FormulaId::kCnotUpper:
      report.value = cnot_bound_from_distance(require_int_param(params, "dist"), require_param(params, "g_min"));
      break;
    case FormulaId::kQubitUnitaryUpper:
      report.value = unitary_qubit_bound(require_int_param(params, "n"), require_param(params, "g_min"),
                                         require_int_param(params, "n_cnot"));
      break;
    case FormulaId::kSingleEdgeG1:
      report.value = upper_bound_edge(require_int_param(params, "d"), kPi / 2.0, 1.0);
      break;
    case FormulaId::kGeneralG1:
      report.value = upper_bound_unitary(require_int_param(params, "d"), 1.0);
      break;
    case FormulaId::kTbUpper:
      report.value = tb_bounds(require_int_param(params, "d")).upper;
      break;
    case FormulaId::kTbLower:
      report.value = tb_bounds(require_int_param(params, "d")).lower;
      break;
    case FormulaId::kVariationalLower:
      throw std::invalid_argument("variational_lower needs a target and a graph; use the graph/target inputs");
  }
  return report;
}

}  // namespace gatetime
