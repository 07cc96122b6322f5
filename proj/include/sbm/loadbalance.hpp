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

#ifndef SBM_LOADBALANCE_HPP_
#define SBM_LOADBALANCE_HPP_

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <vector>

#include "sbm/graph.hpp"

namespace sbm {

struct TaskSet {
  std::vector<double> loads;  // one non-negative entry per task
};

// Machine-side capacity of the assignment graph.
struct Capacity {
  enum class Mode { kAuto, kFixed, kUnbounded };
  Mode mode = Mode::kAuto;
  std::int64_t value = 0;  // used by kFixed

  static Capacity automatic() { return {Mode::kAuto, 0}; }
  static Capacity fixed(std::int64_t per_machine) { return {Mode::kFixed, per_machine}; }
  // Semi-matching: only the one-machine-per-task side is constrained.
  static Capacity unbounded() { return {Mode::kUnbounded, 0}; }
};

// Complete bipartite task x machine graph. Task t is vertex t, machine j is
// vertex num_tasks + j, and edge (t, j) has id t * num_machines + j.
struct AssignmentInstance {
  Graph graph;
  BVector b;
  std::size_t num_tasks = 0;
  std::size_t num_machines = 0;
  std::int64_t machine_capacity = 0;
};

inline constexpr std::size_t kMaxAssignmentEdges = 100'000'000;

// Weight of (t, j) is load(t); b(task) = 1 and b(machine) follows `capacity`
// (ceil(tasks / machines) in auto mode). Throws DomainError on zero machines
// or negative loads, InfeasibleError when capacity * machines < tasks or the
// graph would exceed kMaxAssignmentEdges.
AssignmentInstance build_assignment_instance(const TaskSet& tasks, std::size_t machines,
                                             Capacity capacity = Capacity::automatic());

inline constexpr std::size_t kUnassigned = std::numeric_limits<std::size_t>::max();

struct Assignment {
  std::vector<std::size_t> machine_of;  // kUnassigned if no machine took the task
  std::vector<double> machine_loads;
  std::vector<std::size_t> messages;  // tasks per machine
};

// Local Lazy Greedy on the assignment graph with the concave polynomial
// objective. threads > 1 runs the parallel variant, which yields the same
// assignment.
Assignment assign(const TaskSet& tasks, std::size_t machines, double alpha,
                  Capacity capacity = Capacity::automatic(), int threads = 1);

// Reads the machine choice of each task off a matching of `instance`.
Assignment assignment_from_matching(const TaskSet& tasks, const AssignmentInstance& instance,
                                    std::span<const EdgeId> edges);

enum class BaselinePolicy { kRoundRobin, kFirstFitCounter };

// round_robin: task i goes to machine i mod machines. first_fit_counter:
// tasks in index order fill machine 0 up to `capacity` (auto when <= 0),
// then machine 1, and so on.
Assignment baseline_assign(const TaskSet& tasks, std::size_t machines, BaselinePolicy policy,
                           std::int64_t capacity = 0);

struct LoadStats {
  double max = 0.0;
  double min = 0.0;
  double mean = 0.0;
  double stddev = 0.0;  // population
  double cv = 0.0;      // stddev / mean
  bool zero_mean = false;  // cv forced to 0
};

LoadStats load_stats(const Assignment& assignment);

// One real per line; blank lines and '#' comments skipped.
TaskSet read_task_loads(std::istream& in);

// Log-normal task loads, exp(N(mu, sigma^2)).
TaskSet lognormal_tasks(std::size_t count, double mu, double sigma, std::uint64_t seed);

}  // namespace sbm

#endif  // SBM_LOADBALANCE_HPP_
