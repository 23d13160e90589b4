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

#include "gatetime/experiments.hpp"

#include "gatetime/bounds.hpp"
#include "gatetime/random.hpp"
#include "gatetime/synthesis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iomanip>
#include <limits>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace gatetime {

namespace {

constexpr double kPi = std::numbers::pi;

struct Task {
  int d = 0;
  std::uint64_t graph_id = 0;
  int trial = 0;
  std::uint64_t seed = 0;
  HamiltonianGraph graph;
  ComplexMatrix target;
  std::string descriptor;
  double lower = 0.0;
  double upper = 0.0;
};

void check_range(const ExperimentOptions& o, int max_d) {
  if (o.d_min < 2 || o.d_max > max_d || o.d_min > o.d_max) {
    throw std::invalid_argument("experiment: d range must lie within [2, " + std::to_string(max_d) + "]");
  }
  if (o.trials_per_graph < 1) throw std::invalid_argument("experiment: trials_per_graph must be >= 1");
  o.grape.validate();
}

std::uint64_t task_seed(std::uint64_t master, int figure, int d, std::size_t graph_index, int trial) {
  std::uint64_t s = derive_seed(master, static_cast<std::uint64_t>(figure));
  s = derive_seed(s, static_cast<std::uint64_t>(d));
  s = derive_seed(s, graph_index);
  return derive_seed(s, static_cast<std::uint64_t>(trial));
}

ExperimentRecord run_task(const Task& task, const ExperimentOptions& options) {
  GrapeConfig config = options.grape;
  config.seed = derive_seed(task.seed, 0x67726170ULL);
  const ControlSystem system(task.graph);
  const MinimumTimeResult search = minimum_time_search(system, task.target, config);

  ExperimentRecord r;
  r.d = task.d;
  r.graph_id = task.graph_id;
  r.trial = task.trial;
  r.seed = task.seed;
  r.target = task.descriptor;
  r.found = search.found;
  r.t_grape = search.found ? search.t_min : std::numeric_limits<double>::quiet_NaN();
  r.lower_bound = task.lower;
  r.upper_bound = task.upper;
  const double slack = options.grape.t_resolution / task.graph.g_min();
  r.violation = !r.found || r.t_grape < r.lower_bound - slack || r.t_grape > r.upper_bound;
  return r;
}

std::vector<ExperimentRecord> run_tasks(const std::vector<Task>& tasks, const ExperimentOptions& options) {
  std::vector<ExperimentRecord> records(tasks.size());
  std::atomic<std::size_t> next{0};
  std::mutex callback_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      records[i] = run_task(tasks[i], options);
      if (options.on_record) {
        std::lock_guard lock(callback_mutex);
        options.on_record(records[i]);
      }
    }
  };
  const int jobs = std::max(1, std::min<int>(options.jobs, static_cast<int>(tasks.size())));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return records;
}

// Deterministic fold in task order.
ExperimentTable aggregate(std::string name, const std::vector<ExperimentRecord>& records,
                          const std::function<double(int)>& bound) {
  ExperimentTable table;
  table.name = std::move(name);
  table.records = records;
  std::map<int, AggregateRow> rows;
  for (const auto& r : records) {
    if (r.violation) table.violations.push_back(r);
    AggregateRow& row = rows[r.d];
    row.d = r.d;
    row.bound = bound(r.d);
    if (!r.found) continue;
    row.avg_t += r.t_grape;
    row.max_t = row.trials == 0 ? r.t_grape : std::max(row.max_t, r.t_grape);
    ++row.trials;
  }
  for (auto& [d, row] : rows) {
    if (row.trials > 0) row.avg_t /= row.trials;
    table.rows.push_back(row);
  }
  return table;
}

std::string format_double(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

void fill_metadata(ExperimentTable& table, const ExperimentOptions& o) {
  table.metadata["seed"] = std::to_string(o.seed);
  table.metadata["d_min"] = std::to_string(o.d_min);
  table.metadata["d_max"] = std::to_string(o.d_max);
  table.metadata["trials_per_graph"] = std::to_string(o.trials_per_graph);
  table.metadata["num_slices"] = std::to_string(o.grape.num_slices);
  table.metadata["max_iters"] = std::to_string(o.grape.max_iters);
  table.metadata["restarts"] = std::to_string(o.grape.restarts);
  table.metadata["error_threshold"] = format_double(o.grape.error_threshold);
  table.metadata["t_resolution"] = format_double(o.grape.t_resolution);
}

}  // namespace

ComplexMatrix random_gue_unitary(int d, std::uint64_t seed) {
  Rng rng(seed);
  ComplexMatrix h = ComplexMatrix::Zero(d, d);
  const double s = std::sqrt(0.5);
  for (int r = 0; r < d; ++r) {
    h(r, r) = rng.normal();
    for (int c = r + 1; c < d; ++c) {
      const complex_t z(s * rng.normal(), s * rng.normal());
      h(r, c) = z;
      h(c, r) = std::conj(z);
    }
  }
  return mat_exp(h, 1.0);
}

ExperimentTable exp_fig1(const ExperimentOptions& options) {
  check_range(options, 6);
  std::vector<Task> tasks;
  for (int d = options.d_min; d <= options.d_max; ++d) {
    Task t;
    t.d = d;
    t.graph = tight_binding(d);
    t.graph_id = canonical_code(t.graph);
    t.seed = task_seed(options.seed, 1, d, 0, 0);
    t.target = edge_rotation(d, 0, d - 1, kPi / 2.0);
    t.descriptor = "swap(1," + std::to_string(d) + ")";
    const TightBindingBounds b = tb_bounds(d);
    t.lower = b.lower;
    t.upper = b.upper;
    tasks.push_back(std::move(t));
  }
  ExperimentTable table = aggregate("fig1", run_tasks(tasks, options), [](int d) { return tb_bounds(d).upper; });
  for (auto& row : table.rows) row.lower = tb_bounds(row.d).lower;
  fill_metadata(table, options);
  table.metadata["system"] = "tight-binding chain, J = 1/sqrt(2(d-1))";
  return table;
}

ExperimentTable exp_fig2(const ExperimentOptions& options) {
  check_range(options, 6);
  std::vector<Task> tasks;
  for (int d = options.d_min; d <= options.d_max; ++d) {
    const auto graphs = enumerate_connected_graphs(d);
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
      for (int trial = 0; trial < options.trials_per_graph; ++trial) {
        Task t;
        t.d = d;
        t.graph_id = graphs[gi].adjacency_bits();
        t.trial = trial;
        t.seed = task_seed(options.seed, 2, d, gi, trial);
        Rng rng(t.seed);
        t.graph = random_weights(graphs[gi], 1.0, 2.0, derive_seed(t.seed, 1));
        const int pair = static_cast<int>(rng.below(static_cast<std::uint64_t>(d * (d - 1) / 2)));
        int n = 0;
        int m = 1;
        for (int i = 0, p = 0; i < d; ++i) {
          for (int j = i + 1; j < d; ++j, ++p) {
            if (p == pair) {
              n = i;
              m = j;
            }
          }
        }
        const double alpha = rng.uniform(-kPi / 2.0, kPi / 2.0);
        t.target = edge_rotation(d, n, m, alpha);
        t.descriptor = "S(" + std::to_string(n + 1) + "," + std::to_string(m + 1) + "," + format_double(alpha) + ")";
        t.lower = variational_lower_bound(t.target, t.graph.to_matrix()).value;
        // Weights are >= 1, so g_min = 1 gives a valid (nominal) bound.
        t.upper = upper_bound_edge(d, alpha, 1.0);
        tasks.push_back(std::move(t));
      }
    }
  }
  ExperimentTable table =
      aggregate("fig2", run_tasks(tasks, options), [](int d) { return kPi * (d - 1.5); });
  fill_metadata(table, options);
  table.metadata["weights"] = "uniform [1, 2], drawn per trial";
  return table;
}

ExperimentTable exp_fig3(const ExperimentOptions& options) {
  check_range(options, 6);
  std::vector<Task> tasks;
  for (int d = options.d_min; d <= options.d_max; ++d) {
    const auto graphs = enumerate_connected_graphs(d);
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
      for (int trial = 0; trial < options.trials_per_graph; ++trial) {
        Task t;
        t.d = d;
        t.graph_id = graphs[gi].adjacency_bits();
        t.trial = trial;
        t.seed = task_seed(options.seed, 3, d, gi, trial);
        t.graph = random_weights(graphs[gi], 1.0, 2.0, derive_seed(t.seed, 1));
        t.target = random_gue_unitary(d, derive_seed(t.seed, 2));
        t.descriptor = "gue";
        t.lower = variational_lower_bound(t.target, t.graph.to_matrix()).value;
        t.upper = upper_bound_unitary(d, 1.0);
        tasks.push_back(std::move(t));
      }
    }
  }
  ExperimentTable table =
      aggregate("fig3", run_tasks(tasks, options), [](int d) { return upper_bound_unitary(d, 1.0); });
  fill_metadata(table, options);
  table.metadata["weights"] = "uniform [1, 2], drawn per trial";
  table.metadata["targets"] = "exp(-iH), H: complex Gaussian off-diagonal (E|z|^2 = 1), real Gaussian diagonal";
  return table;
}

void ExperimentTable::write_summary_csv(std::ostream& os) const {
  os << "d,trials,avg_T,max_T,bound,lower\n";
  for (const auto& r : rows) {
    os << r.d << ',' << r.trials << ',' << format_double(r.avg_t) << ',' << format_double(r.max_t) << ','
       << format_double(r.bound) << ',' << format_double(r.lower) << '\n';
  }
}

void ExperimentTable::write_trials_csv(std::ostream& os) const {
  os << "d,graph_id,trial,seed,target,T_grape,lower_bound,upper_bound,found,violation\n";
  for (const auto& r : records) {
    os << r.d << ',' << r.graph_id << ',' << r.trial << ',' << r.seed << ",\"" << r.target << "\","
       << format_double(r.t_grape) << ',' << format_double(r.lower_bound) << ',' << format_double(r.upper_bound)
       << ',' << (r.found ? 1 : 0) << ',' << (r.violation ? 1 : 0) << '\n';
  }
}

}  // namespace gatetime
