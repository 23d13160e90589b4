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

#include "gatetime/grape.hpp"

#include "gatetime/bounds.hpp"
#include "gatetime/random.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

namespace gatetime {

namespace {

struct Slice {
  ComplexMatrix eigvecs;
  RealVector eigvals;
  ComplexMatrix propagator;
};

Slice make_slice(const ComplexMatrix& drift, const FieldArray& fields, Eigen::Index k, double dt,
                 Eigen::SelfAdjointEigenSolver<ComplexMatrix>& solver) {
  ComplexMatrix h = drift;
  for (Eigen::Index n = 0; n < h.rows(); ++n) h(n, n) += fields(n, k);
  solver.compute(h);
  Slice s{solver.eigenvectors(), solver.eigenvalues(), {}};
  ComplexVector phases(s.eigvals.size());
  for (Eigen::Index a = 0; a < phases.size(); ++a) phases[a] = std::polar(1.0, -s.eigvals[a] * dt);
  s.propagator = s.eigvecs * phases.asDiagonal() * s.eigvecs.adjoint();
  return s;
}

// (e^{-i a dt} - e^{-i b dt}) / (a - b), continuous at a = b.
complex_t divided_difference(double a, double b, double dt) {
  const double x = 0.5 * (a - b) * dt;
  const double sinc = std::abs(x) < 1e-8 ? 1.0 - x * x / 6.0 : std::sin(x) / x;
  return complex_t(0.0, -dt) * std::polar(1.0, -0.5 * (a + b) * dt) * sinc;
}

struct Evaluation {
  double error;
  FieldArray gradient;
};

Evaluation evaluate(const ControlSystem& system, const ComplexMatrix& target, const FieldArray& fields,
                    double total_time, bool with_gradient) {
  const Eigen::Index d = system.dim();
  const Eigen::Index slices = fields.cols();
  const double dt = slices > 0 ? total_time / static_cast<double>(slices) : 0.0;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(d);

  std::vector<Slice> sl;
  sl.reserve(slices);
  // forward[k] = U_{k-1} ... U_0
  std::vector<ComplexMatrix> forward;
  forward.reserve(slices + 1);
  forward.push_back(ComplexMatrix::Identity(d, d));
  for (Eigen::Index k = 0; k < slices; ++k) {
    sl.push_back(make_slice(system.drift, fields, k, dt, solver));
    forward.push_back(sl.back().propagator * forward.back());
  }
  const ComplexMatrix target_adj = target.adjoint();
  const complex_t overlap = (target_adj * forward.back()).trace();
  const double dd = static_cast<double>(d * d);
  Evaluation out{std::clamp(1.0 - std::norm(overlap) / dd, 0.0, 1.0), FieldArray()};
  if (!with_gradient) return out;

  out.gradient = FieldArray::Zero(d, slices);
  ComplexMatrix backward = ComplexMatrix::Identity(d, d);  // U_{N-1} ... U_{k+1}
  ComplexMatrix z(d, d);
  for (Eigen::Index k = slices - 1; k >= 0; --k) {
    const Slice& s = sl[k];
    // d overlap = Tr(X dU_k), X = forward[k] U_g^dagger backward.
    const ComplexMatrix x = forward[k] * target_adj * backward;
    const ComplexMatrix y = s.eigvecs.adjoint() * x * s.eigvecs;
    for (Eigen::Index a = 0; a < d; ++a) {
      for (Eigen::Index b = 0; b < d; ++b) z(a, b) = y(b, a) * divided_difference(s.eigvals[a], s.eigvals[b], dt);
    }
    const ComplexMatrix zw = z * s.eigvecs.transpose();  // (Z W^T)(a, n)
    for (Eigen::Index n = 0; n < d; ++n) {
      complex_t dg = 0.0;
      for (Eigen::Index a = 0; a < d; ++a) dg += std::conj(s.eigvecs(n, a)) * zw(a, n);
      out.gradient(n, k) = -2.0 * std::real(std::conj(overlap) * dg) / dd;
    }
    backward = backward * s.propagator;
  }
  return out;
}

}  // namespace

void GrapeConfig::validate() const {
  if (num_slices < 1) throw std::invalid_argument("GrapeConfig: num_slices must be >= 1");
  if (restarts < 1) throw std::invalid_argument("GrapeConfig: restarts must be >= 1");
  if (!(error_threshold > 0.0)) throw std::invalid_argument("GrapeConfig: error_threshold must be > 0");
  if (!(t_resolution > 0.0)) throw std::invalid_argument("GrapeConfig: t_resolution must be > 0");
  if (max_iters < 0) throw std::invalid_argument("GrapeConfig: max_iters must be >= 0");
  if (lbfgs_memory < 1) throw std::invalid_argument("GrapeConfig: lbfgs_memory must be >= 1");
}

ComplexMatrix propagate(const ControlSystem& system, const FieldArray& fields, double total_time) {
  if (fields.rows() != system.dim()) throw std::invalid_argument("propagate: fields must have d rows");
  const Eigen::Index d = system.dim();
  const Eigen::Index slices = fields.cols();
  ComplexMatrix u = ComplexMatrix::Identity(d, d);
  if (slices == 0 || total_time == 0.0) return u;
  const double dt = total_time / static_cast<double>(slices);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(d);
  for (Eigen::Index k = 0; k < slices; ++k) u = make_slice(system.drift, fields, k, dt, solver).propagator * u;
  return u;
}

ErrorAndGradient error_and_gradient(const ControlSystem& system, const ComplexMatrix& target,
                                    const FieldArray& fields, double total_time) {
  if (fields.rows() != system.dim()) throw std::invalid_argument("error_and_gradient: fields must have d rows");
  Evaluation e = evaluate(system, target, fields, total_time, true);
  return {e.error, std::move(e.gradient)};
}

FieldArray initial_fields(int dim, const GrapeConfig& config, int member) {
  Rng rng(derive_seed(config.seed, static_cast<std::uint64_t>(member)));
  FieldArray f(dim, config.num_slices);
  for (Eigen::Index k = 0; k < f.cols(); ++k) {
    for (Eigen::Index n = 0; n < f.rows(); ++n) f(n, k) = config.field_init_scale * rng.normal();
  }
  return f;
}

GrapeResult grape_run(const ControlSystem& system, const ComplexMatrix& target, double total_time,
                      FieldArray initial, const GrapeConfig& config) {
  config.validate();
  if (total_time < 0.0) throw std::invalid_argument("grape: total time must be >= 0");
  if (initial.rows() != system.dim()) throw std::invalid_argument("grape: fields must have d rows");

  // L-BFGS with Armijo backtracking on the gate error.
  FieldArray x = std::move(initial);
  Evaluation cur = evaluate(system, target, x, total_time, true);
  std::deque<std::pair<FieldArray, FieldArray>> memory;  // (s, y)
  std::deque<double> history{cur.error};
  int iter = 0;
  for (; iter < config.max_iters && cur.error >= config.error_threshold; ++iter) {
    const double gnorm = cur.gradient.norm();
    if (gnorm < 1e-14) break;

    FieldArray q = cur.gradient;
    std::vector<double> alphas(memory.size());
    for (std::size_t i = memory.size(); i-- > 0;) {
      const auto& [s, y] = memory[i];
      alphas[i] = (s.cwiseProduct(q)).sum() / (y.cwiseProduct(s)).sum();
      q -= alphas[i] * y;
    }
    if (!memory.empty()) {
      const auto& [s, y] = memory.back();
      q *= (s.cwiseProduct(y)).sum() / y.squaredNorm();
    } else {
      q /= gnorm;
    }
    for (std::size_t i = 0; i < memory.size(); ++i) {
      const auto& [s, y] = memory[i];
      const double beta = (y.cwiseProduct(q)).sum() / (y.cwiseProduct(s)).sum();
      q += (alphas[i] - beta) * s;
    }
    FieldArray direction = -q;
    double slope = (direction.cwiseProduct(cur.gradient)).sum();
    if (!(slope < 0.0)) {
      memory.clear();
      direction = -cur.gradient / gnorm;
      slope = -gnorm;
    }

    double step = 1.0;
    Evaluation next;
    FieldArray trial;
    bool accepted = false;
    for (int ls = 0; ls < 40; ++ls) {
      trial = x + step * direction;
      next = evaluate(system, target, trial, total_time, false);
      if (next.error <= cur.error + 1e-4 * step * slope) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      if (memory.empty()) break;
      memory.clear();
      continue;
    }
    next = evaluate(system, target, trial, total_time, true);
    FieldArray s = trial - x;
    FieldArray y = next.gradient - cur.gradient;
    if ((s.cwiseProduct(y)).sum() > 1e-16 * s.norm() * y.norm()) {
      memory.emplace_back(std::move(s), std::move(y));
      if (static_cast<int>(memory.size()) > config.lbfgs_memory) memory.pop_front();
    }
    x = std::move(trial);
    cur = std::move(next);

    history.push_back(cur.error);
    if (static_cast<int>(history.size()) > config.stall_window) {
      if (cur.error > config.stall_factor * history.front()) {
        ++iter;
        break;
      }
      history.pop_front();
    }
  }

  GrapeResult out;
  out.total_time = total_time;
  out.fields = std::move(x);
  out.final_error = cur.error;
  out.converged = cur.error < config.error_threshold;
  out.iterations = iter;
  return out;
}

GrapeResult grape_optimize(const ControlSystem& system, const ComplexMatrix& target, double total_time,
                           const GrapeConfig& config) {
  config.validate();
  GrapeResult best;
  for (int member = 0; member < config.restarts; ++member) {
    GrapeResult r = grape_run(system, target, total_time, initial_fields(system.dim(), config, member), config);
    r.member = member;
    if (member == 0 || r.final_error < best.final_error) best = std::move(r);
  }
  return best;
}

bool population_succeeds(const ControlSystem& system, const ComplexMatrix& target, double total_time,
                         const GrapeConfig& config, GrapeResult* result) {
  GrapeResult best;
  for (int member = 0; member < config.restarts; ++member) {
    GrapeResult r = grape_run(system, target, total_time, initial_fields(system.dim(), config, member), config);
    r.member = member;
    const bool converged = r.converged;
    if (member == 0 || r.final_error < best.final_error) best = std::move(r);
    if (converged) break;
  }
  const bool ok = best.converged;
  if (result != nullptr) *result = std::move(best);
  return ok;
}

MinimumTimeResult minimum_time_search(const ControlSystem& system, const ComplexMatrix& target,
                                      const GrapeConfig& config) {
  config.validate();
  if (!system.graph.is_connected()) throw InfeasibleError("minimum_time_search: drift graph is not connected");
  const int d = system.dim();
  const double g_min = system.graph.g_min();
  const double resolution = config.t_resolution / g_min;

  MinimumTimeResult out;
  out.cap = upper_bound_unitary(std::max(d, 2), g_min);

  auto probe = [&](double t, GrapeResult* r) {
    const bool ok = population_succeeds(system, target, t, config, r);
    out.probes.push_back({t, ok, r->final_error});
    return ok;
  };

  double lo = 0.0;
  double hi = resolution;
  GrapeResult hit;
  GrapeResult attempt;
  bool found = false;
  while (true) {
    if (probe(hi, &attempt)) {
      hit = std::move(attempt);
      found = true;
      break;
    }
    if (hi >= out.cap) break;
    lo = hi;
    hi = std::min(2.0 * hi, out.cap);
  }
  if (!found) {
    out.result = std::move(attempt);
    return out;
  }
  while (hi - lo > resolution * (1.0 + 1e-9)) {
    const double mid = 0.5 * (lo + hi);
    if (probe(mid, &attempt)) {
      hi = mid;
      hit = std::move(attempt);
    } else {
      lo = mid;
    }
  }
  out.found = true;
  out.t_min = hi;
  out.result = std::move(hit);
  return out;
}

}  // namespace gatetime
