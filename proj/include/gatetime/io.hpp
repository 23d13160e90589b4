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

// JSON artifact formats. Vertex and level labels are 1-based on disk and
// 0-based in memory. Every document carries "schema_version".

#include "gatetime/bounds.hpp"
#include "gatetime/graph.hpp"
#include "gatetime/grape.hpp"
#include "gatetime/synthesis.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace gatetime {

inline constexpr int kSchemaVersion = 1;

/// Input document that cannot be parsed or does not match its schema.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using json = nlohmann::json;

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& doc);

// {"dim": d, "edges": [{"n": 1, "m": 2, "re": 1.0, "im": 0.0}, ...]}
json graph_to_json(const HamiltonianGraph& graph);
HamiltonianGraph graph_from_json(const json& doc);

// {"dim": d, "re": [[...], ...], "im": [[...], ...]}
json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const json& doc);

// {"dim": d, "total_time": T, "steps": [{"type": "diag", "phases": [...]},
//  {"type": "edge", "n": .., "m": .., "alpha": .., "duration": ..}], "metadata": {...}}
json schedule_to_json(const PulseSchedule& schedule);
PulseSchedule schedule_from_json(const json& doc);

json grape_result_to_json(const GrapeResult& result);
GrapeResult grape_result_from_json(const json& doc);

json bound_report_to_json(const BoundReport& report);

}  // namespace gatetime
