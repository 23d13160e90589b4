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

#include "gatetime/cli.hpp"

#include "gatetime/bounds.hpp"
#include "gatetime/decoupling.hpp"
#include "gatetime/experiments.hpp"
#include "gatetime/io.hpp"
#include "gatetime/oracles.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>

namespace gatetime::cli {

namespace {

constexpr double kPi = std::numbers::pi;

class SearchFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Context {
  std::ostream& out;
  std::ostream& err;
  bool verbose = false;
  std::optional<std::uint64_t> seed_flag;
  std::string out_path;

  std::uint64_t seed() const {
    if (seed_flag) return *seed_flag;
    if (const char* env = std::getenv("GATETIME_SEED")) {
      try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(env, &used);
        if (used == std::string(env).size()) return v;
      } catch (const std::exception&) {
      }
      throw UsageError(std::string("GATETIME_SEED is not an unsigned integer: '") + env + "'");
    }
    return 1;
  }

  void log(const std::string& line) const {
    if (verbose) err << line << '\n';
  }

  void emit(const json& doc) const {
    if (out_path.empty()) {
      out << doc.dump(2) << '\n';
    } else {
      write_json_file(out_path, doc);
      log("wrote " + out_path);
    }
  }
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

double parse_double(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError(what + ": not a number: '" + text + "'");
}

int parse_int(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError(what + ": not an integer: '" + text + "'");
}

// "d=3,g_min=1" -> {d: 3, g_min: 1}. Values may also be "pi" or "pi/X".
std::map<std::string, double> parse_params(const std::string& text) {
  std::map<std::string, double> params;
  if (text.empty()) return params;
  for (const auto& item : split(text, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("--params: expected key=value, got '" + item + "'");
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    if (value == "pi") {
      params[key] = kPi;
      continue;
    }
    if (value.rfind("pi/", 0) == 0) {
      params[key] = kPi / parse_double(value.substr(3), key);
      continue;
    }
    params[key] = parse_double(value, key);
  }
  return params;
}

std::pair<int, int> parse_pair(const std::string& text, int dim, const std::string& what) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw UsageError(what + ": expected N,M");
  const int n = parse_int(parts[0], what) - 1;
  const int m = parse_int(parts[1], what) - 1;
  if (n < 0 || m < 0 || n >= dim || m >= dim || n == m) throw UsageError(what + ": levels out of range");
  return {n, m};
}

struct Target {
  ComplexMatrix matrix;
  std::string descriptor;
};

// Inline forms: swap:N,M | rot:N,M,ALPHA | random[:SEED] | identity; anything
// else is read as a matrix JSON file.
Target parse_target(const std::string& spec, int dim, const Context& ctx) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (kind == "swap" || kind == "rot") {
    const auto parts = split(rest, ',');
    if (parts.size() != (kind == "swap" ? 2u : 3u)) throw UsageError("--target: bad " + kind + " spec");
    const auto [n, m] = parse_pair(parts[0] + "," + parts[1], dim, "--target");
    const double alpha = kind == "swap" ? kPi / 2.0 : parse_double(parts[2], "--target alpha");
    return {edge_rotation(dim, n, m, alpha), spec};
  }
  if (kind == "random") {
    const std::uint64_t seed = rest.empty() ? ctx.seed() : static_cast<std::uint64_t>(parse_int(rest, "--target"));
    return {random_gue_unitary(dim, seed), "random:" + std::to_string(seed)};
  }
  if (kind == "identity") return {ComplexMatrix::Identity(dim, dim), spec};
  ComplexMatrix m = matrix_from_json(read_json_file(spec));
  if (m.rows() != dim) throw FormatError("target dimension does not match the graph");
  if (!is_unitary(m)) throw FormatError("target matrix is not unitary");
  return {std::move(m), spec};
}

HamiltonianGraph load_graph(const std::string& path) { return graph_from_json(read_json_file(path)); }

json run_metadata(const std::string& subcommand, const Context& ctx, json extra = json::object()) {
  extra["subcommand"] = subcommand;
  extra["seed"] = ctx.seed();
  return extra;
}

json phases_json(const DiagonalPhases& p) {
  json a = json::array();
  for (int k = 0; k < p.dim(); ++k) a.push_back(p[k]);
  return a;
}

// ---- bounds ---------------------------------------------------------------

json evaluate_one(const std::string& formula, const std::map<std::string, double>& params) {
  return bound_report_to_json(evaluate_bound(formula_from_string(formula), params));
}

void cmd_bounds(Context& ctx, const std::string& formula, const std::string& params, const std::string& batch,
                const std::string& graph_path, const std::string& target_spec) {
  if (!batch.empty()) {
    const json doc = read_json_file(batch);
    if (!doc.is_array()) throw FormatError("--batch: expected a JSON array of {formula, params}");
    json reports = json::array();
    for (const json& item : doc) {
      std::map<std::string, double> p;
      try {
        p = item.at("params").get<std::map<std::string, double>>();
        reports.push_back(evaluate_one(item.at("formula").get<std::string>(), p));
      } catch (const json::exception& e) {
        throw FormatError(std::string("--batch: ") + e.what());
      }
    }
    ctx.emit({{"schema_version", kSchemaVersion}, {"reports", reports}, {"metadata", run_metadata("bounds", ctx)}});
    return;
  }
  if (formula.empty()) throw UsageError("bounds: --formula or --batch is required");
  if (formula == "variational_lower") {
    if (graph_path.empty() || target_spec.empty()) {
      throw UsageError("bounds: variational_lower needs --graph and --target");
    }
    const HamiltonianGraph graph = load_graph(graph_path);
    const Target target = parse_target(target_spec, graph.dim(), ctx);
    const LowerBoundResult r = variational_lower_bound(target.matrix, graph.to_matrix());
    json doc = {{"schema_version", kSchemaVersion},
                {"formula_id", formula},
                {"inputs", {{"graph", graph_path}, {"target", target.descriptor}}},
                {"value", r.infinite ? json("inf") : json(r.value)},
                {"limit_value", r.infinite ? json("inf") : json(r.limit_value)},
                {"interior_value", r.interior_value},
                {"interior_exceeds_limit", r.interior_exceeds_limit},
                {"best_phases", phases_json(r.best_phases)},
                {"metadata", run_metadata("bounds", ctx)}};
    ctx.emit(doc);
    return;
  }
  json doc = evaluate_one(formula, parse_params(params));
  doc["metadata"] = run_metadata("bounds", ctx);
  ctx.emit(doc);
}

// ---- graphs ---------------------------------------------------------------

void cmd_graphs_enumerate(Context& ctx, int d) {
  json graphs = json::array();
  for (const HamiltonianGraph& g : enumerate_connected_graphs(d)) {
    json item = graph_to_json(g);
    item["id"] = g.adjacency_bits();
    graphs.push_back(item);
  }
  ctx.emit({{"schema_version", kSchemaVersion},
            {"d", d},
            {"count", graphs.size()},
            {"graphs", graphs},
            {"metadata", run_metadata("graphs enumerate", ctx)}});
}

void cmd_graphs_single(Context& ctx, const HamiltonianGraph& g, const std::string& name) {
  json doc = graph_to_json(g);
  doc["metadata"] = run_metadata(name, ctx);
  ctx.emit(doc);
}

// ---- synth / simulate -----------------------------------------------------

json synth_oracle(const HamiltonianGraph& graph, const ComplexMatrix& target) {
  int checked = 0;
  int mismatches = 0;
  json rows = json::array();
  for (const TwoLevelUnitary& f : two_level_decompose(target)) {
    const EulerAngles e = euler_decompose(f.block);
    if (e.theta < 1e-12) continue;
    const PathPlan fast = shortest_time_path(graph, f.n, f.m, e.theta / 2.0);
    const PathPlan slow = exhaustive_shortest_path(graph, f.n, f.m, e.theta / 2.0);
    const bool ok = std::abs(fast.time - slow.time) <= 1e-9 * std::max(1.0, slow.time);
    ++checked;
    if (!ok) ++mismatches;
    rows.push_back({{"n", f.n + 1}, {"m", f.m + 1}, {"dijkstra", fast.time}, {"exhaustive", slow.time}});
  }
  return {{"paths_checked", checked}, {"mismatches", mismatches}, {"paths", rows}};
}

void cmd_synth(Context& ctx, const std::string& graph_path, const std::string& target_spec, bool oracle) {
  const HamiltonianGraph graph = load_graph(graph_path);
  if (!graph.is_connected()) throw InfeasibleError("synth: graph is not connected");
  const Target target = parse_target(target_spec, graph.dim(), ctx);
  PulseSchedule schedule = synthesize(graph, target.matrix);
  schedule.metadata["target"] = target.descriptor;
  schedule.metadata["graph"] = graph_path;
  schedule.metadata["seed"] = std::to_string(ctx.seed());
  const double error = gate_error(target.matrix, simulate(graph, schedule, SimulationMode::ideal()));
  json doc = schedule_to_json(schedule);
  doc["report"] = {{"gate_error", error},
                   {"edge_evolutions", schedule.edge_evolution_count()},
                   {"upper_bound", upper_bound_unitary(graph.dim(), graph.g_min())}};
  if (oracle) doc["report"]["oracle"] = synth_oracle(graph, target.matrix);
  ctx.emit(doc);
}

void cmd_simulate(Context& ctx, const std::string& graph_path, const std::string& schedule_path, int trotter_n,
                  const std::string& target_spec) {
  const HamiltonianGraph graph = load_graph(graph_path);
  const PulseSchedule schedule = schedule_from_json(read_json_file(schedule_path));
  if (schedule.dim() != graph.dim()) throw FormatError("simulate: schedule and graph dimensions differ");
  const SimulationMode mode = trotter_n > 0 ? SimulationMode::trotter(trotter_n) : SimulationMode::ideal();
  const ComplexMatrix u = simulate(graph, schedule, mode);
  json doc = {{"schema_version", kSchemaVersion},
              {"unitary", matrix_to_json(u)},
              {"total_time", schedule.total_time()},
              {"metadata", run_metadata("simulate", ctx, {{"trotter_n", trotter_n}})}};
  if (!target_spec.empty()) {
    doc["gate_error"] = gate_error(parse_target(target_spec, graph.dim(), ctx).matrix, u);
  }
  ctx.emit(doc);
}

// ---- decouple -------------------------------------------------------------

void cmd_decouple(Context& ctx, const std::string& graph_path, const std::string& edge, int trotter_n, double t) {
  const HamiltonianGraph graph = load_graph(graph_path);
  const auto [n, m] = parse_pair(edge, graph.dim(), "--edge");
  const EdgeIsolation iso = isolate_edge(graph, n, m);
  json surviving = json::array();
  for (int r = 0; r < graph.dim(); ++r) {
    for (int c = r + 1; c < graph.dim(); ++c) {
      const complex_t g = iso.raw(r, c);
      if (std::abs(g) > tol::kAlgebraic) {
        surviving.push_back({{"n", r + 1}, {"m", c + 1}, {"re", g.real()}, {"im", g.imag()}});
      }
    }
  }
  json doc = {{"schema_version", kSchemaVersion},
              {"edge", {n + 1, m + 1}},
              {"map_size", iso.map.size()},
              {"surviving_edges", surviving},
              {"effective", matrix_to_json(iso.effective.matrix)},
              {"correction", phases_json(iso.correction)},
              {"metadata", run_metadata("decouple", ctx, {{"trotter_n", trotter_n}, {"time", t}})}};
  if (trotter_n > 0) doc["trotter_error"] = trotter_error(iso.map, graph.to_matrix(), t, trotter_n);
  ctx.emit(doc);
}

// ---- grape ----------------------------------------------------------------

json probes_json(const std::vector<TimeProbe>& probes) {
  json a = json::array();
  for (const auto& p : probes) a.push_back({{"T", p.total_time}, {"success", p.success}, {"error", p.best_error}});
  return a;
}

json config_json(const GrapeConfig& c) {
  return {{"num_slices", c.num_slices},      {"max_iters", c.max_iters},   {"error_threshold", c.error_threshold},
          {"restarts", c.restarts},          {"t_resolution", c.t_resolution}, {"seed", c.seed},
          {"field_init_scale", c.field_init_scale}};
}

void cmd_grape(Context& ctx, const std::string& graph_path, const std::string& target_spec, GrapeConfig config,
               std::optional<double> time, bool oracle) {
  const HamiltonianGraph graph = load_graph(graph_path);
  if (!graph.is_connected()) throw InfeasibleError("grape: graph is not connected");
  const Target target = parse_target(target_spec, graph.dim(), ctx);
  config.seed = ctx.seed();
  config.validate();
  const ControlSystem system(graph);
  json doc = {{"schema_version", kSchemaVersion}, {"target", target.descriptor}};
  doc["metadata"] = run_metadata("grape", ctx, {{"config", config_json(config)}});
  if (time) {
    const GrapeResult r = grape_optimize(system, target.matrix, *time, config);
    doc["mode"] = "fixed";
    doc["result"] = grape_result_to_json(r);
    ctx.emit(doc);
    return;
  }
  const MinimumTimeResult search = minimum_time_search(system, target.matrix, config);
  doc["mode"] = "search";
  doc["found"] = search.found;
  doc["t_min"] = search.found ? json(search.t_min) : json(nullptr);
  doc["cap"] = search.cap;
  doc["probes"] = probes_json(search.probes);
  doc["result"] = grape_result_to_json(search.result);
  if (oracle && search.found) {
    const double step = config.t_resolution / graph.g_min();
    const TimeScan scan = fine_time_scan(system, target.matrix, config, step, search.t_min + 5.0 * step);
    doc["oracle"] = {{"step", step},
                     {"probes", scan.probes},
                     {"first_success", scan.first_success ? json(*scan.first_success) : json(nullptr)}};
  }
  ctx.emit(doc);
  if (!search.found) throw SearchFailure("grape: no converged run below the time cap");
}

// ---- experiment -----------------------------------------------------------

void cmd_experiment(Context& ctx, const std::string& figure, ExperimentOptions options, const std::string& dir) {
  options.seed = ctx.seed();
  if (ctx.verbose) {
    options.on_record = [&ctx](const ExperimentRecord& r) {
      std::ostringstream os;
      os << "d=" << r.d << " graph=" << r.graph_id << " trial=" << r.trial << " T=" << r.t_grape
         << (r.violation ? " VIOLATION" : "");
      ctx.log(os.str());
    };
  }
  ExperimentTable table;
  if (figure == "fig1") {
    table = exp_fig1(options);
  } else if (figure == "fig2") {
    table = exp_fig2(options);
  } else if (figure == "fig3") {
    table = exp_fig3(options);
  } else {
    throw UsageError("experiment: unknown figure '" + figure + "' (fig1, fig2, fig3)");
  }
  json violations = json::array();
  for (const auto& r : table.violations) {
    violations.push_back({{"d", r.d}, {"graph_id", r.graph_id}, {"trial", r.trial}, {"T_grape", r.t_grape},
                          {"lower_bound", r.lower_bound}, {"upper_bound", r.upper_bound}, {"found", r.found}});
  }
  json meta = {{"schema_version", kSchemaVersion},
               {"experiment", table.name},
               {"metadata", table.metadata},
               {"jobs", options.jobs},
               {"violations", violations}};
  std::ostringstream summary;
  table.write_summary_csv(summary);
  if (!dir.empty()) {
    std::filesystem::create_directories(dir);
    const std::filesystem::path base(dir);
    std::ofstream(base / (table.name + "_summary.csv")) << summary.str();
    std::ofstream trials(base / (table.name + "_trials.csv"));
    table.write_trials_csv(trials);
    write_json_file((base / (table.name + "_meta.json")).string(), meta);
    ctx.log("wrote " + dir);
  }
  ctx.out << summary.str();
  const bool failed = std::any_of(table.records.begin(), table.records.end(), [](auto& r) { return !r.found; });
  if (failed) throw SearchFailure("experiment: at least one minimum-time search failed");
}

int report(std::ostream& err, int code, const std::string& kind, const std::string& message) {
  err << json{{"error", {{"code", code}, {"kind", kind}, {"message", message}}}}.dump() << '\n';
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx{out, err, false, std::nullopt, {}};
  CLI::App app{"gatetime: minimum gate time bounds, synthesis and optimal control", "gatetime"};
  app.require_subcommand(1);
  app.add_option("--seed", ctx.seed_flag, "master seed (falls back to GATETIME_SEED, then 1)");
  app.add_flag("-v,--verbose", ctx.verbose, "progress on stderr");
  app.add_option("--out", ctx.out_path, "write the JSON artifact here (experiment: output directory)");
  app.fallthrough();

  // bounds
  std::string formula, params, batch, graph_path, target_spec;
  auto* bounds = app.add_subcommand("bounds", "evaluate a closed-form bound");
  bounds->add_option("--formula", formula, "formula id");
  bounds->add_option("--params", params, "k=v,... (values may be pi, pi/2, ...)");
  bounds->add_option("--batch", batch, "JSON array of {formula, params}");
  bounds->add_option("--graph", graph_path, "graph JSON (variational_lower)");
  bounds->add_option("--target", target_spec, "target (variational_lower)");

  // graphs
  int d = 0;
  double low = 1.0, high = 2.0;
  auto* graphs = app.add_subcommand("graphs", "graph utilities");
  graphs->require_subcommand(1);
  graphs->fallthrough();
  auto* enumerate = graphs->add_subcommand("enumerate", "connected graphs up to isomorphism");
  enumerate->add_option("--d", d, "order")->required();
  auto* tb = graphs->add_subcommand("tight-binding", "normalized path graph");
  tb->add_option("--d", d, "order")->required();
  auto* complete = graphs->add_subcommand("complete", "complete graph with unit weights");
  complete->add_option("--d", d, "order")->required();
  auto* weights = graphs->add_subcommand("random-weights", "redraw edge weights uniformly");
  weights->add_option("--graph", graph_path, "graph JSON")->required();
  weights->add_option("--low", low, "lower weight");
  weights->add_option("--high", high, "upper weight");

  // synth
  bool oracle = false;
  auto* synth = app.add_subcommand("synth", "constructive pulse schedule for a target");
  synth->add_option("--graph", graph_path, "graph JSON")->required();
  synth->add_option("--target", target_spec, "target: file or swap:N,M | rot:N,M,A | random[:S] | identity")
      ->required();
  synth->add_flag("--oracle", oracle, "cross-check paths by exhaustive enumeration");

  // simulate
  std::string schedule_path;
  int trotter_n = 0;
  auto* sim = app.add_subcommand("simulate", "evolve a schedule on a graph");
  sim->add_option("--graph", graph_path, "graph JSON")->required();
  sim->add_option("--schedule", schedule_path, "schedule JSON")->required();
  sim->add_option("--trotter-n", trotter_n, "finite Trotter steps (0 = ideal)")->check(CLI::NonNegativeNumber);
  sim->add_option("--target", target_spec, "report the gate error against this target");

  // decouple
  std::string edge;
  double decouple_time = 1.0;
  auto* dec = app.add_subcommand("decouple", "isolate one edge by vertex removal");
  dec->add_option("--graph", graph_path, "graph JSON")->required();
  dec->add_option("--edge", edge, "N,M")->required();
  dec->add_option("--trotter-n", trotter_n, "also report the Trotter error at this n")->check(CLI::NonNegativeNumber);
  dec->add_option("--time", decouple_time, "evolution time for the Trotter error");

  // grape
  GrapeConfig grape_config;
  std::optional<double> grape_time;
  auto* grape = app.add_subcommand("grape", "optimal control at a fixed time, or a minimum-time search");
  grape->add_option("--graph", graph_path, "graph JSON")->required();
  grape->add_option("--target", target_spec, "target spec")->required();
  grape->add_option("--time", grape_time, "fixed total time (omit to search)");
  grape->add_option("--slices", grape_config.num_slices, "time slices")->check(CLI::PositiveNumber);
  grape->add_option("--threshold", grape_config.error_threshold, "gate error threshold");
  grape->add_option("--restarts", grape_config.restarts, "population size")->check(CLI::PositiveNumber);
  grape->add_option("--max-iters", grape_config.max_iters, "iterations per run")->check(CLI::PositiveNumber);
  grape->add_option("--t-resolution", grape_config.t_resolution, "search resolution times g_min");
  grape->add_flag("--oracle", oracle, "confirm the search with a fine T-scan");

  // experiment
  ExperimentOptions exp_options;
  std::string figure;
  auto* exp = app.add_subcommand("experiment", "figure pipelines, CSV output");
  exp->add_option("figure", figure, "fig1 | fig2 | fig3")->required();
  exp->add_option("--d-min", exp_options.d_min, "smallest d");
  exp->add_option("--d-max", exp_options.d_max, "largest d");
  exp->add_option("--trials", exp_options.trials_per_graph, "trials per graph")->check(CLI::PositiveNumber);
  exp->add_option("--jobs", exp_options.jobs, "worker threads")->check(CLI::PositiveNumber);
  exp->add_option("--slices", exp_options.grape.num_slices, "GRAPE time slices")->check(CLI::PositiveNumber);
  exp->add_option("--restarts", exp_options.grape.restarts, "GRAPE population")->check(CLI::PositiveNumber);
  exp->add_option("--max-iters", exp_options.grape.max_iters, "GRAPE iterations")->check(CLI::PositiveNumber);
  exp->add_option("--threshold", exp_options.grape.error_threshold, "gate error threshold");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    return report(err, kUsage, "usage", e.what());
  }

  try {
    if (bounds->parsed()) {
      cmd_bounds(ctx, formula, params, batch, graph_path, target_spec);
    } else if (enumerate->parsed()) {
      cmd_graphs_enumerate(ctx, d);
    } else if (tb->parsed()) {
      cmd_graphs_single(ctx, tight_binding(d), "graphs tight-binding");
    } else if (complete->parsed()) {
      cmd_graphs_single(ctx, complete_graph(d), "graphs complete");
    } else if (weights->parsed()) {
      cmd_graphs_single(ctx, random_weights(load_graph(graph_path), low, high, ctx.seed()), "graphs random-weights");
    } else if (synth->parsed()) {
      cmd_synth(ctx, graph_path, target_spec, oracle);
    } else if (sim->parsed()) {
      cmd_simulate(ctx, graph_path, schedule_path, trotter_n, target_spec);
    } else if (dec->parsed()) {
      cmd_decouple(ctx, graph_path, edge, trotter_n, decouple_time);
    } else if (grape->parsed()) {
      cmd_grape(ctx, graph_path, target_spec, grape_config, grape_time, oracle);
    } else if (exp->parsed()) {
      cmd_experiment(ctx, figure, exp_options, ctx.out_path);
    }
  } catch (const FormatError& e) {
    return report(err, kMalformedInput, "malformed_input", e.what());
  } catch (const json::exception& e) {
    return report(err, kMalformedInput, "malformed_input", e.what());
  } catch (const InfeasibleError& e) {
    return report(err, kInfeasible, "infeasible", e.what());
  } catch (const SearchFailure& e) {
    return report(err, kSearchFailure, "search_failure", e.what());
  } catch (const std::invalid_argument& e) {
    return report(err, kUsage, "invalid_argument", e.what());
  } catch (const std::out_of_range& e) {
    return report(err, kUsage, "invalid_argument", e.what());
  } catch (const std::exception& e) {
    return report(err, kInternal, "internal", e.what());
  }
  return kOk;
}

}  // namespace gatetime::cli
