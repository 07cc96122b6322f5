// Copyright 2026 The sbm Authors.
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

#include "sbm/loadbalance.hpp"

#include <cmath>
#include <istream>
#include <random>
#include <sstream>
#include <string>

#include "sbm/errors.hpp"
#include "sbm/matching.hpp"
#include "sbm/objective.hpp"
#include "sbm/parallel.hpp"

namespace sbm {
namespace {

void check_tasks(const TaskSet& tasks, std::size_t machines) {
  if (machines == 0) throw DomainError("at least one machine is required");
  for (double load : tasks.loads) {
    if (!(load >= 0.0) || !std::isfinite(load)) {
      throw DomainError("task loads must be finite and non-negative");
    }
  }
}

std::int64_t ceil_div(std::size_t a, std::size_t b) {
  return static_cast<std::int64_t>((a + b - 1) / b);
}

Assignment empty_assignment(std::size_t tasks, std::size_t machines) {
  Assignment a;
  a.machine_of.assign(tasks, kUnassigned);
  a.machine_loads.assign(machines, 0.0);
  a.messages.assign(machines, 0);
  return a;
}

void place(Assignment& a, const TaskSet& tasks, std::size_t task, std::size_t machine) {
  a.machine_of[task] = machine;
  a.machine_loads[machine] += tasks.loads[task];
  ++a.messages[machine];
}

}  // namespace

AssignmentInstance build_assignment_instance(const TaskSet& tasks, std::size_t machines,
                                             Capacity capacity) {
  check_tasks(tasks, machines);
  const std::size_t num_tasks = tasks.loads.size();
  if (num_tasks != 0 && machines > kMaxAssignmentEdges / num_tasks) {
    throw InfeasibleError("assignment graph would exceed " +
                          std::to_string(kMaxAssignmentEdges) +
                          " edges; split the task set or coarsen the blocks");
  }
  std::int64_t per_machine = 0;
  switch (capacity.mode) {
    case Capacity::Mode::kAuto:
      per_machine = ceil_div(num_tasks, machines);
      break;
    case Capacity::Mode::kFixed:
      if (capacity.value < 0) throw DomainError("machine capacity must be non-negative");
      per_machine = capacity.value;
      if (static_cast<long double>(per_machine) * machines < num_tasks) {
        throw InfeasibleError(std::to_string(machines) + " machines with capacity " +
                              std::to_string(per_machine) + " cannot take " +
                              std::to_string(num_tasks) + " tasks");
      }
      break;
    case Capacity::Mode::kUnbounded:
      per_machine = static_cast<std::int64_t>(num_tasks);
      break;
  }

  std::vector<WeightedEdge> edges;
  edges.reserve(num_tasks * machines);
  for (std::size_t t = 0; t < num_tasks; ++t) {
    for (std::size_t j = 0; j < machines; ++j) {
      edges.push_back({static_cast<VertexId>(t), static_cast<VertexId>(num_tasks + j),
                       tasks.loads[t]});
    }
  }
  AssignmentInstance out;
  out.graph = Graph::from_edges(num_tasks + machines, edges);
  std::vector<std::int64_t> b(num_tasks + machines, 1);
  for (std::size_t j = 0; j < machines; ++j) b[num_tasks + j] = per_machine;
  out.b = make_b_vector(out.graph, b);
  out.num_tasks = num_tasks;
  out.num_machines = machines;
  out.machine_capacity = per_machine;
  return out;
}

Assignment assignment_from_matching(const TaskSet& tasks, const AssignmentInstance& instance,
                                    std::span<const EdgeId> edges) {
  Assignment a = empty_assignment(instance.num_tasks, instance.num_machines);
  for (EdgeId e : edges) {
    const auto [task, machine_vertex] = instance.graph.endpoints(e);
    if (a.machine_of[task] != kUnassigned) {
      throw DomainError("task " + std::to_string(task) + " matched twice");
    }
    place(a, tasks, task, machine_vertex - instance.num_tasks);
  }
  return a;
}

Assignment assign(const TaskSet& tasks, std::size_t machines, double alpha, Capacity capacity,
                  int threads) {
  const ConcavePolynomial objective(alpha);
  const auto instance = build_assignment_instance(tasks, machines, capacity);
  const MatchResult result =
      threads > 1 ? parallel_local_lazy_greedy(instance.graph, instance.b, objective,
                                               ParallelConfig{threads, 64})
                  : local_lazy_greedy(instance.graph, instance.b, objective);
  return assignment_from_matching(tasks, instance, result.edges);
}

Assignment baseline_assign(const TaskSet& tasks, std::size_t machines, BaselinePolicy policy,
                           std::int64_t capacity) {
  check_tasks(tasks, machines);
  const std::size_t n = tasks.loads.size();
  Assignment a = empty_assignment(n, machines);
  if (policy == BaselinePolicy::kRoundRobin) {
    for (std::size_t t = 0; t < n; ++t) place(a, tasks, t, t % machines);
    return a;
  }
  const std::int64_t cap = capacity > 0 ? capacity : ceil_div(n, machines);
  if (static_cast<long double>(cap) * machines < n) {
    throw InfeasibleError("first-fit capacity too small for the task count");
  }
  for (std::size_t t = 0; t < n; ++t) {
    place(a, tasks, t, t / static_cast<std::size_t>(cap));
  }
  return a;
}

LoadStats load_stats(const Assignment& assignment) {
  LoadStats s;
  const auto& loads = assignment.machine_loads;
  if (loads.empty()) {
    s.zero_mean = true;
    return s;
  }
  s.max = *std::max_element(loads.begin(), loads.end());
  s.min = *std::min_element(loads.begin(), loads.end());
  double sum = 0.0;
  for (double x : loads) sum += x;
  s.mean = sum / static_cast<double>(loads.size());
  double sq = 0.0;
  for (double x : loads) sq += (x - s.mean) * (x - s.mean);
  s.stddev = std::sqrt(sq / static_cast<double>(loads.size()));
  if (s.mean > 0.0) {
    s.cv = s.stddev / s.mean;
  } else {
    s.zero_mean = true;
  }
  return s;
}

TaskSet read_task_loads(std::istream& in) {
  TaskSet tasks;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    double load = 0.0;
    std::string rest;
    if (!(ls >> load) || (ls >> rest)) {
      throw ParseError("loads line " + std::to_string(lineno) + ": expected one number");
    }
    if (!(load >= 0.0)) {
      throw DomainError("loads line " + std::to_string(lineno) + ": negative load");
    }
    tasks.loads.push_back(load);
  }
  return tasks;
}

TaskSet lognormal_tasks(std::size_t count, double mu, double sigma, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::lognormal_distribution<double> dist(mu, sigma);
  TaskSet tasks;
  tasks.loads.reserve(count);
  for (std::size_t i = 0; i < count; ++i) tasks.loads.push_back(dist(rng));
  return tasks;
}

}  // namespace sbm
