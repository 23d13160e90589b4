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

#include "gatetime/cli.hpp"
#include "gatetime/io.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

using namespace gatetime;

namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
  json doc() const { return json::parse(out); }
  json error() const { return json::parse(err); }
};

Outcome run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "gatetime_cli_test";
  std::filesystem::create_directories(dir);
  return (dir / name).string();
}

}  // namespace

TEST_CASE("cli bounds") {
  const Outcome r = run_cli({"bounds", "--formula", "unitary_upper", "--params", "d=3,g_min=1"});
  REQUIRE(r.code == cli::kOk);
  CHECK(r.doc().at("value").get<double>() == Catch::Approx(9.0 * std::numbers::pi));
  CHECK(r.doc().at("formula_id") == "unitary_upper");
  const Outcome edge = run_cli({"bounds", "--formula", "edge_upper", "--params", "d=4,alpha=pi/2,g_min=1"});
  CHECK(edge.doc().at("value").get<double>() == Catch::Approx(2.5 * std::numbers::pi));

  const std::string batch = scratch("batch.json");
  std::ofstream(batch) << R"([{"formula": "tb_lower", "params": {"d": 3}},
                              {"formula": "cnot_upper", "params": {"dist": 2, "g_min": 1}}])";
  const Outcome b = run_cli({"bounds", "--batch", batch});
  REQUIRE(b.code == cli::kOk);
  CHECK(b.doc().at("reports").size() == 2);
  CHECK(b.doc().at("reports")[1].at("value").get<double>() == Catch::Approx(1.25 * std::numbers::pi));
  CHECK(run_cli({"bounds", "--formula", "nope"}).code == cli::kUsage);
  CHECK(run_cli({"bounds", "--formula", "edge_upper", "--params", "d=3"}).code == cli::kUsage);
}

TEST_CASE("cli graphs") {
  const Outcome r = run_cli({"graphs", "enumerate", "--d", "4"});
  REQUIRE(r.code == cli::kOk);
  CHECK(r.doc().at("count") == 6);
  for (const json& g : r.doc().at("graphs")) CHECK(graph_from_json(g).is_connected());
  const Outcome tb = run_cli({"graphs", "tight-binding", "--d", "5"});
  CHECK(graph_from_json(tb.doc()) == tight_binding(5));
}

TEST_CASE("cli synth, simulate round trip on the tight-binding swap") {
  const std::string graph = scratch("tb5.json");
  const std::string target = scratch("swap_1_5.json");
  const std::string schedule = scratch("schedule.json");
  REQUIRE(run_cli({"graphs", "tight-binding", "--d", "5", "--out", graph}).code == cli::kOk);
  write_json_file(target, matrix_to_json(edge_rotation(5, 0, 4, std::numbers::pi / 2.0)));

  const Outcome s = run_cli({"synth", "--graph", graph, "--target", target, "--oracle"});
  REQUIRE(s.code == cli::kOk);
  const json doc = s.doc();
  CHECK(doc.at("total_time").get<double>() == Catch::Approx(std::numbers::pi / 2.0 * 7.0 * std::sqrt(8.0)));
  CHECK(doc.at("report").at("gate_error").get<double>() < 1e-9);
  CHECK(doc.at("report").at("oracle").at("mismatches") == 0);
  CHECK(doc.at("report").at("oracle").at("paths_checked").get<int>() >= 1);
  CHECK(doc.at("metadata").contains("seed"));

  REQUIRE(run_cli({"synth", "--graph", graph, "--target", "random:5", "--out", schedule}).code == cli::kOk);
  const Outcome sim = run_cli({"simulate", "--graph", graph, "--schedule", schedule, "--target", "random:5"});
  REQUIRE(sim.code == cli::kOk);
  CHECK(sim.doc().at("gate_error").get<double>() < 1e-9);
  const Outcome trotter =
      run_cli({"simulate", "--graph", graph, "--schedule", schedule, "--target", "random:5", "--trotter-n", "64"});
  REQUIRE(trotter.code == cli::kOk);
  CHECK(trotter.doc().at("gate_error").get<double>() > sim.doc().at("gate_error").get<double>());
}

TEST_CASE("cli decouple") {
  const std::string graph = scratch("k4.json");
  REQUIRE(run_cli({"graphs", "complete", "--d", "4", "--out", graph}).code == cli::kOk);
  const Outcome r = run_cli({"decouple", "--graph", graph, "--edge", "2,4", "--trotter-n", "32"});
  REQUIRE(r.code == cli::kOk);
  CHECK(r.doc().at("surviving_edges").size() == 1);
  CHECK(r.doc().at("surviving_edges")[0].at("n") == 2);
  CHECK(r.doc().at("map_size") == 4);
  CHECK(r.doc().at("trotter_error").get<double>() > 0.0);
}

TEST_CASE("cli grape at fixed time and as a search") {
  const std::string graph = scratch("k2.json");
  REQUIRE(run_cli({"graphs", "complete", "--d", "2", "--out", graph}).code == cli::kOk);
  const Outcome fixed = run_cli({"grape", "--graph", graph, "--target", "swap:1,2", "--time", "2.0", "--slices", "16",
                                 "--restarts", "2", "--max-iters", "300"});
  REQUIRE(fixed.code == cli::kOk);
  CHECK(fixed.doc().at("result").at("converged") == true);
  const GrapeResult back = grape_result_from_json(fixed.doc().at("result"));
  CHECK(back.fields.cols() == 16);

  const Outcome search = run_cli({"grape", "--graph", graph, "--target", "swap:1,2", "--slices", "16", "--restarts",
                                  "2", "--max-iters", "300", "--oracle", "--seed", "4"});
  REQUIRE(search.code == cli::kOk);
  const double t = search.doc().at("t_min").get<double>();
  CHECK(t == Catch::Approx(std::numbers::pi / 2.0).epsilon(0.1));
  CHECK(search.doc().at("oracle").at("first_success").get<double>() <= t + 1e-9);
  CHECK(search.doc().at("metadata").at("seed") == 4);

  const Outcome fail = run_cli({"grape", "--graph", graph, "--target", "swap:1,2", "--slices", "4", "--restarts", "1",
                                "--max-iters", "1", "--threshold", "1e-14"});
  CHECK(fail.code == cli::kSearchFailure);
  CHECK(fail.error().at("error").at("code") == cli::kSearchFailure);
}

TEST_CASE("cli error codes") {
  const std::string bad = scratch("bad.json");
  std::ofstream(bad) << "{ \"dim\": 3, ";
  const Outcome malformed = run_cli({"synth", "--graph", bad, "--target", "identity"});
  CHECK(malformed.code == cli::kMalformedInput);
  CHECK(malformed.error().at("error").at("kind") == "malformed_input");

  const std::string split = scratch("split.json");
  HamiltonianGraph g(3);
  g.set_coupling(0, 1, 1.0);
  write_json_file(split, graph_to_json(g));
  CHECK(run_cli({"synth", "--graph", split, "--target", "random:1"}).code == cli::kInfeasible);
  CHECK(run_cli({"decouple", "--graph", split, "--edge", "1,3"}).code == cli::kInfeasible);

  const Outcome unknown = run_cli({"bounds", "--formula", "unitary_upper", "--bogus"});
  CHECK(unknown.code == cli::kUsage);
  CHECK(unknown.error().at("error").at("code") == cli::kUsage);
  CHECK(run_cli({"frobnicate"}).code == cli::kUsage);
  CHECK(run_cli({}).code == cli::kUsage);
  CHECK(run_cli({"--help"}).code == cli::kOk);
}

TEST_CASE("cli seed falls back to GATETIME_SEED") {
  const std::string graph = scratch("k3.json");
  REQUIRE(run_cli({"graphs", "complete", "--d", "3", "--out", graph}).code == cli::kOk);
  const Outcome explicit_seed = run_cli({"graphs", "random-weights", "--graph", graph, "--seed", "77"});
  ::setenv("GATETIME_SEED", "77", 1);
  const Outcome env_seed = run_cli({"graphs", "random-weights", "--graph", graph});
  ::setenv("GATETIME_SEED", "not-a-number", 1);
  const Outcome bad_env = run_cli({"graphs", "random-weights", "--graph", graph});
  ::unsetenv("GATETIME_SEED");
  REQUIRE(explicit_seed.code == cli::kOk);
  REQUIRE(env_seed.code == cli::kOk);
  CHECK(graph_from_json(explicit_seed.doc()) == graph_from_json(env_seed.doc()));
  CHECK(env_seed.doc().at("metadata").at("seed") == 77);
  CHECK(bad_env.code == cli::kUsage);
}

TEST_CASE("cli experiment writes CSV tables") {
  const std::string dir = scratch("fig2");
  const Outcome r = run_cli({"experiment", "fig2", "--d-min", "2", "--d-max", "2", "--trials", "2", "--slices", "16",
                             "--restarts", "2", "--max-iters", "300", "--out", dir, "--seed", "3"});
  REQUIRE(r.code == cli::kOk);
  CHECK(r.out.rfind("d,trials,avg_T,max_T,bound,lower", 0) == 0);
  CHECK(std::filesystem::exists(std::filesystem::path(dir) / "fig2_summary.csv"));
  CHECK(std::filesystem::exists(std::filesystem::path(dir) / "fig2_trials.csv"));
  const json meta = read_json_file((std::filesystem::path(dir) / "fig2_meta.json").string());
  CHECK(meta.at("metadata").at("seed") == "3");
  CHECK(meta.at("violations").empty());
  CHECK(run_cli({"experiment", "fig9"}).code == cli::kUsage);
}
