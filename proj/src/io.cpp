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

#include "gatetime/io.hpp"

#include <fstream>

namespace gatetime {

namespace {

void check_schema(const json& doc, const char* what) {
  if (!doc.is_object()) throw FormatError(std::string(what) + ": expected a JSON object");
  if (doc.contains("schema_version") && doc.at("schema_version") != kSchemaVersion) {
    throw FormatError(std::string(what) + ": unsupported schema_version " + doc.at("schema_version").dump());
  }
}

// nlohmann throws json::exception on type mismatches; surface them as FormatError.
template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw FormatError(std::string(what) + ": " + e.what());
  }
}

int read_dim(const json& doc, const char* what) {
  const int d = doc.at("dim").get<int>();
  if (d < 1) throw FormatError(std::string(what) + ": dim must be >= 1");
  return d;
}

}  // namespace

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError("malformed JSON in '" + path + "': " + e.what());
  }
}

void write_json_file(const std::string& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << doc.dump(2) << '\n';
}

json graph_to_json(const HamiltonianGraph& graph) {
  json edges = json::array();
  for (const Edge& e : graph.edges()) {
    edges.push_back({{"n", e.n + 1}, {"m", e.m + 1}, {"re", e.g.real()}, {"im", e.g.imag()}});
  }
  return {{"schema_version", kSchemaVersion}, {"dim", graph.dim()}, {"edges", edges}};
}

HamiltonianGraph graph_from_json(const json& doc) {
  check_schema(doc, "graph");
  return guarded("graph", [&] {
    HamiltonianGraph g(read_dim(doc, "graph"));
    for (const json& e : doc.at("edges")) {
      const int n = e.at("n").get<int>() - 1;
      const int m = e.at("m").get<int>() - 1;
      const double re = e.at("re").get<double>();
      const double im = e.value("im", 0.0);
      if (n < 0 || m < 0 || n >= g.dim() || m >= g.dim() || n == m) {
        throw FormatError("graph: invalid edge (" + std::to_string(n + 1) + "," + std::to_string(m + 1) + ")");
      }
      if (re == 0.0 && im == 0.0) throw FormatError("graph: zero coupling on an edge");
      g.set_coupling(n, m, complex_t(re, im));
    }
    return g;
  });
}

json matrix_to_json(const ComplexMatrix& m) {
  json re = json::array();
  json im = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json rr = json::array();
    json ir = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      rr.push_back(m(r, c).real());
      ir.push_back(m(r, c).imag());
    }
    re.push_back(rr);
    im.push_back(ir);
  }
  return {{"schema_version", kSchemaVersion}, {"dim", m.rows()}, {"re", re}, {"im", im}};
}

ComplexMatrix matrix_from_json(const json& doc) {
  check_schema(doc, "matrix");
  return guarded("matrix", [&] {
    const int d = read_dim(doc, "matrix");
    const json& re = doc.at("re");
    const json im = doc.contains("im") ? doc.at("im") : json();
    if (!re.is_array() || static_cast<int>(re.size()) != d) throw FormatError("matrix: 're' must have dim rows");
    ComplexMatrix m(d, d);
    for (int r = 0; r < d; ++r) {
      if (!re[r].is_array() || static_cast<int>(re[r].size()) != d) {
        throw FormatError("matrix: every row must have dim entries");
      }
      for (int c = 0; c < d; ++c) {
        const double ipart = im.is_null() ? 0.0 : im.at(r).at(c).get<double>();
        m(r, c) = complex_t(re[r][c].get<double>(), ipart);
      }
    }
    return m;
  });
}

json schedule_to_json(const PulseSchedule& schedule) {
  json steps = json::array();
  for (const ScheduleStep& s : schedule.steps()) {
    if (const auto* p = std::get_if<DiagonalPulse>(&s)) {
      json phases = json::array();
      for (int k = 0; k < p->phases.dim(); ++k) phases.push_back(p->phases[k]);
      steps.push_back({{"type", "diag"}, {"phases", phases}});
    } else {
      const auto& e = std::get<EdgeEvolution>(s);
      steps.push_back(
          {{"type", "edge"}, {"n", e.n + 1}, {"m", e.m + 1}, {"alpha", e.alpha}, {"duration", e.duration}});
    }
  }
  return {{"schema_version", kSchemaVersion},
          {"dim", schedule.dim()},
          {"total_time", schedule.total_time()},
          {"steps", steps},
          {"metadata", schedule.metadata}};
}

PulseSchedule schedule_from_json(const json& doc) {
  check_schema(doc, "schedule");
  return guarded("schedule", [&] {
    const int d = read_dim(doc, "schedule");
    PulseSchedule s(d);
    for (const json& step : doc.at("steps")) {
      const std::string type = step.at("type").get<std::string>();
      if (type == "diag") {
        const auto phases = step.at("phases").get<std::vector<double>>();
        if (static_cast<int>(phases.size()) != d) throw FormatError("schedule: diag step needs dim phases");
        RealVector theta(d);
        for (int k = 0; k < d; ++k) theta[k] = phases[k];
        s.append_diagonal(DiagonalPhases(theta));
      } else if (type == "edge") {
        EdgeEvolution e{step.at("n").get<int>() - 1, step.at("m").get<int>() - 1, step.at("alpha").get<double>(),
                        step.at("duration").get<double>()};
        if (e.n > e.m) std::swap(e.n, e.m);
        if (e.n < 0 || e.m >= d || e.n == e.m) throw FormatError("schedule: invalid edge step");
        s.append_edge(e);
      } else {
        throw FormatError("schedule: unknown step type '" + type + "'");
      }
    }
    if (doc.contains("metadata")) s.metadata = doc.at("metadata").get<std::map<std::string, std::string>>();
    return s;
  });
}

json grape_result_to_json(const GrapeResult& result) {
  json fields = json::array();
  for (Eigen::Index n = 0; n < result.fields.rows(); ++n) {
    json row = json::array();
    for (Eigen::Index k = 0; k < result.fields.cols(); ++k) row.push_back(result.fields(n, k));
    fields.push_back(row);
  }
  return {{"schema_version", kSchemaVersion},   {"T", result.total_time},
          {"final_error", result.final_error},  {"converged", result.converged},
          {"iterations", result.iterations},    {"member", result.member},
          {"num_slices", result.fields.cols()}, {"fields", fields}};
}

GrapeResult grape_result_from_json(const json& doc) {
  check_schema(doc, "grape result");
  return guarded("grape result", [&] {
    GrapeResult r;
    r.total_time = doc.at("T").get<double>();
    r.final_error = doc.at("final_error").get<double>();
    r.converged = doc.at("converged").get<bool>();
    r.iterations = doc.at("iterations").get<int>();
    r.member = doc.value("member", 0);
    const json& fields = doc.at("fields");
    const auto rows = static_cast<Eigen::Index>(fields.size());
    const auto cols = rows > 0 ? static_cast<Eigen::Index>(fields[0].size()) : 0;
    r.fields = FieldArray(rows, cols);
    for (Eigen::Index n = 0; n < rows; ++n) {
      if (static_cast<Eigen::Index>(fields[n].size()) != cols) throw FormatError("grape result: ragged fields");
      for (Eigen::Index k = 0; k < cols; ++k) r.fields(n, k) = fields[n][k].get<double>();
    }
    return r;
  });
}

json bound_report_to_json(const BoundReport& report) {
  return {{"schema_version", kSchemaVersion},
          {"formula_id", to_string(report.formula)},
          {"inputs", report.inputs},
          {"value", report.value}};
}

}  // namespace gatetime
