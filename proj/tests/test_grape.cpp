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

#include "catch_amalgamated.hpp"

#include "gatetime/bounds.hpp"
#include "gatetime/grape.hpp"
#include "gatetime/synthesis.hpp"
#include "test_util.hpp"

#include <numbers>

using namespace gatetime;
using gatetime::testing::max_abs_diff;

namespace {

constexpr double kPi = std::numbers::pi;

ControlSystem qubit() {
  HamiltonianGraph g(2);
  g.set_coupling(0, 1, 1.0);
  return ControlSystem(g);
}

GrapeConfig light_config() {
  GrapeConfig c;
  c.num_slices = 32;
  c.restarts = 4;
  c.max_iters = 500;
  return c;
}

}  // namespace

TEST_CASE("propagate: trivial cases and unitarity") {
  std::mt19937_64 rng(70);
  const ControlSystem sys(testing::random_connected_graph(3, rng));
  CHECK(max_abs_diff(propagate(sys, FieldArray::Zero(3, 8), 1.3), testing::taylor_exp(sys.drift, 1.3)) < 1e-12);
  CHECK(max_abs_diff(propagate(sys, FieldArray::Random(3, 8), 0.0), ComplexMatrix::Identity(3, 3)) < 1e-15);
  CHECK(is_unitary(propagate(sys, 5.0 * FieldArray::Random(3, 1024), 10.0), 1e-9));
}

TEST_CASE("propagate: Rabi suppression by opposing fields") {
  const ControlSystem sys = qubit();
  const double t = 1.1;
  double previous_envelope = 2.0;
  for (double f : {0.0, 0.5, 1.0, 2.0, 4.0, 8.0}) {
    FieldArray fields(2, 16);
    fields.row(0).setConstant(f);
    fields.row(1).setConstant(-f);
    const ComplexMatrix u = propagate(sys, fields, t);
    // H = f Z + X: P(1 -> 2) = sin^2(sqrt(1 + f^2) t) / (1 + f^2).
    const double omega = std::sqrt(1.0 + f * f);
    const double expected = std::pow(std::sin(omega * t), 2) / (1.0 + f * f);
    CHECK(std::norm(u(1, 0)) == Catch::Approx(expected).margin(1e-12));
    CHECK(std::norm(u(1, 0)) <= 1.0 / (1.0 + f * f) + 1e-12);
    CHECK(1.0 / (1.0 + f * f) < previous_envelope);
    previous_envelope = 1.0 / (1.0 + f * f);
  }
}

TEST_CASE("error gradient matches central finite differences") {
  std::mt19937_64 rng(71);
  for (int instance = 0; instance < 10; ++instance) {
    const int d = 2 + instance % 3;
    const ControlSystem sys(testing::random_connected_graph(d, rng));
    const ComplexMatrix target = testing::random_unitary(d, rng);
    std::normal_distribution<double> n(0.0, 1.0);
    FieldArray f(d, 6);
    for (int r = 0; r < d; ++r)
      for (int k = 0; k < 6; ++k) f(r, k) = n(rng);
    const double t = 1.5;
    const ErrorAndGradient eg = error_and_gradient(sys, target, f, t);
    CHECK(eg.error == Catch::Approx(gate_error(target, propagate(sys, f, t))).epsilon(1e-12));
    FieldArray fd(d, 6);
    const double h = 1e-6;
    for (int r = 0; r < d; ++r) {
      for (int k = 0; k < 6; ++k) {
        FieldArray plus = f, minus = f;
        plus(r, k) += h;
        minus(r, k) -= h;
        fd(r, k) = (gate_error(target, propagate(sys, plus, t)) - gate_error(target, propagate(sys, minus, t))) /
                   (2.0 * h);
      }
    }
    CHECK((eg.gradient - fd).norm() / fd.norm() < 1e-4);
  }
}

TEST_CASE("grape: already optimal start converges immediately") {
  std::mt19937_64 rng(72);
  const ControlSystem sys(testing::random_connected_graph(3, rng));
  const ComplexMatrix target = mat_exp(sys.drift, 0.9);
  const GrapeResult r = grape_run(sys, target, 0.9, FieldArray::Zero(3, 16), GrapeConfig{});
  CHECK(r.converged);
  CHECK(r.iterations == 0);
}

TEST_CASE("grape: two-level swap above and below the speed limit") {
  const ControlSystem sys = qubit();
  const ComplexMatrix target = edge_rotation(2, 0, 1, kPi / 2.0);
  const GrapeResult above = grape_optimize(sys, target, 2.0, light_config());
  CHECK(above.converged);
  CHECK(above.final_error < 1e-4);
  CHECK(gate_error(target, propagate(sys, above.fields, 2.0)) == Catch::Approx(above.final_error).margin(1e-12));
  const GrapeResult below = grape_optimize(sys, target, 0.5, light_config());
  CHECK_FALSE(below.converged);
  CHECK(variational_lower_bound(target, sys.drift).value > 0.5);
}

TEST_CASE("grape: deterministic for a fixed seed") {
  const ControlSystem sys(tight_binding(3));
  const ComplexMatrix target = edge_rotation(3, 0, 2, kPi / 2.0);
  GrapeConfig c = light_config();
  c.max_iters = 60;
  const GrapeResult a = grape_optimize(sys, target, 3.0, c);
  const GrapeResult b = grape_optimize(sys, target, 3.0, c);
  CHECK(a.final_error == b.final_error);
  CHECK(a.fields == b.fields);
  CHECK(a.member == b.member);
}

TEST_CASE("config validation") {
  GrapeConfig c;
  c.num_slices = 0;
  CHECK_THROWS(c.validate());
  c = GrapeConfig{};
  c.error_threshold = 0.0;
  CHECK_THROWS(c.validate());
  c = GrapeConfig{};
  c.restarts = 0;
  CHECK_THROWS(c.validate());
  CHECK_NOTHROW(GrapeConfig{}.validate());
}

TEST_CASE("minimum_time_search: diagonal targets are free") {
  const ControlSystem sys(tight_binding(3));
  RealVector t(3);
  t << 0.4, -1.2, 2.0;
  const GrapeConfig c = light_config();
  const MinimumTimeResult r = minimum_time_search(sys, DiagonalPhases(t).matrix(), c);
  REQUIRE(r.found);
  CHECK(r.t_min <= c.t_resolution / sys.graph.g_min() + 1e-12);
}

TEST_CASE("minimum_time_search: two-level swap near pi/2") {
  const ControlSystem sys = qubit();
  const GrapeConfig c = light_config();
  const MinimumTimeResult r = minimum_time_search(sys, edge_rotation(2, 0, 1, kPi / 2.0), c);
  REQUIRE(r.found);
  CHECK(r.t_min >= 0.9 * kPi / 2.0);
  CHECK(r.t_min <= 1.1 * kPi / 2.0);
  CHECK(r.cap == Catch::Approx(2.0 * kPi));
  CHECK(r.result.converged);
  // Bracketing: the probe just below t_min failed.
  bool below_failed = false;
  for (const auto& p : r.probes)
    if (!p.success && std::abs(p.total_time - (r.t_min - c.t_resolution)) < 1e-9) below_failed = true;
  CHECK(below_failed);
}

TEST_CASE("minimum_time_search: tight-binding d=3 lies between the bounds") {
  const ControlSystem sys(tight_binding(3));
  const MinimumTimeResult r = minimum_time_search(sys, edge_rotation(3, 0, 2, kPi / 2.0), light_config());
  REQUIRE(r.found);
  CHECK(r.t_min >= 2.0 * std::sqrt(2.0));
  CHECK(r.t_min <= 3.0 * kPi);
}
