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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>
#include <vector>

#include "sbm/errors.hpp"
#include "sbm/loadbalance.hpp"
#include "sbm/matching.hpp"

namespace sbm {
namespace {

const TaskSet kBlocks{{300, 200, 100, 50}};

TEST(Instance, Examples) {
  const auto four = build_assignment_instance(kBlocks, 2);
  EXPECT_EQ(four.graph.num_edges(), 8u);
  EXPECT_EQ(four.machine_capacity, 2);
  EXPECT_EQ(four.b[4], 2);
  EXPECT_EQ(four.b[0], 1);
  EXPECT_EQ(four.graph.find_edge(2, 5), 2u * 2 + 1);
  EXPECT_DOUBLE_EQ(four.graph.weight(four.graph.find_edge(1, 5)), 200.0);

  const auto one = build_assignment_instance(TaskSet{{5}}, 1);
  EXPECT_EQ(one.graph.num_edges(), 1u);
  EXPECT_EQ(one.b[0], 1);
  EXPECT_EQ(one.b[1], 1);

  EXPECT_EQ(build_assignment_instance(TaskSet{{1, 2, 3, 4, 5}}, 2).machine_capacity, 3);
  EXPECT_EQ(build_assignment_instance(kBlocks, 2, Capacity::unbounded()).machine_capacity, 4);
  EXPECT_EQ(build_assignment_instance(kBlocks, 2, Capacity::fixed(3)).machine_capacity, 3);

  EXPECT_THROW(build_assignment_instance(kBlocks, 2, Capacity::fixed(1)), InfeasibleError);
  EXPECT_THROW(build_assignment_instance(kBlocks, 0), DomainError);
  EXPECT_THROW(build_assignment_instance(TaskSet{{1, -1}}, 2), DomainError);
}

TEST(Assign, WorkedExample) {
  const Assignment a = assign(kBlocks, 2, 0.5);
  EXPECT_EQ(a.machine_loads, (std::vector<double>{350, 300}));
  EXPECT_EQ(a.machine_of, (std::vector<std::size_t>{0, 1, 1, 0}));
  EXPECT_EQ(a.messages, (std::vector<std::size_t>{2, 2}));
  EXPECT_NEAR(load_stats(a).cv, 0.07692307692307693, 1e-15);
  EXPECT_EQ(assign(kBlocks, 2, 0.5, Capacity::automatic(), 4).machine_of, a.machine_of);
}

TEST(Assign, EqualLoadsBalance) {
  const Assignment a = assign(TaskSet{{7, 7, 7, 7}}, 2, 0.5);
  EXPECT_EQ(a.machine_loads, (std::vector<double>{14, 14}));
  EXPECT_EQ(load_stats(a).cv, 0.0);
}

TEST(Assign, ModularObjectiveIsIndifferent) {
  const auto inst = build_assignment_instance(kBlocks, 2);
  const ConcavePolynomial linear(1.0);
  // Every 2+2 split has the same modular value.
  for (int mask = 0; mask < 16; ++mask) {
    if (__builtin_popcount(mask) != 2) continue;
    std::vector<EdgeId> edges;
    for (VertexId t = 0; t < 4; ++t) {
      edges.push_back(inst.graph.find_edge(t, 4 + ((mask >> t) & 1)));
    }
    EXPECT_DOUBLE_EQ(evaluate_matching(edges, inst.graph, linear), 1300.0);
  }
  const Assignment a = assign(kBlocks, 2, 1.0);
  EXPECT_EQ(a.machine_loads, (std::vector<double>{500, 150}));
}

TEST(Baseline, Examples) {
  const Assignment rr = baseline_assign(kBlocks, 2, BaselinePolicy::kRoundRobin);
  EXPECT_EQ(rr.machine_loads, (std::vector<double>{400, 250}));
  EXPECT_NEAR(load_stats(rr).cv, 0.23076923076923078, 1e-15);
  const Assignment ff = baseline_assign(kBlocks, 2, BaselinePolicy::kFirstFitCounter, 2);
  EXPECT_EQ(ff.machine_loads, (std::vector<double>{500, 150}));
  EXPECT_NEAR(load_stats(ff).cv, 0.5384615384615384, 1e-15);
  for (auto policy : {BaselinePolicy::kRoundRobin, BaselinePolicy::kFirstFitCounter}) {
    const Assignment single = baseline_assign(kBlocks, 1, policy);
    EXPECT_EQ(single.machine_loads, std::vector<double>{650});
    EXPECT_EQ(single.machine_of, (std::vector<std::size_t>{0, 0, 0, 0}));
  }
  EXPECT_THROW(baseline_assign(kBlocks, 2, BaselinePolicy::kFirstFitCounter, 1),
               InfeasibleError);
}

TEST(LoadStatsTest, Examples) {
  Assignment a;
  a.machine_loads = {2, 2, 2};
  EXPECT_EQ(load_stats(a).stddev, 0.0);
  EXPECT_EQ(load_stats(a).cv, 0.0);
  a.machine_loads = {1, 3};
  const LoadStats s = load_stats(a);
  EXPECT_DOUBLE_EQ(s.mean, 2.0);
  EXPECT_DOUBLE_EQ(s.stddev, 1.0);
  EXPECT_DOUBLE_EQ(s.cv, 0.5);
  EXPECT_EQ(s.max, 3.0);
  EXPECT_EQ(s.min, 1.0);
  a.machine_loads = {0, 0};
  EXPECT_TRUE(load_stats(a).zero_mean);
  EXPECT_EQ(load_stats(a).cv, 0.0);
}

TEST(SemiMatching, HalfOfOptimum) {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> tasks_d(1, 6), machines_d(1, 3);
  std::uniform_real_distribution<double> load_d(1.0, 100.0);
  const ConcavePolynomial f(0.5);
  for (int trial = 0; trial < 100; ++trial) {
    TaskSet tasks;
    for (int t = tasks_d(rng); t > 0; --t) tasks.loads.push_back(load_d(rng));
    const std::size_t machines = machines_d(rng);
    const auto inst = build_assignment_instance(tasks, machines, Capacity::unbounded());
    const double opt = brute_force_optimal(inst.graph, inst.b, f).value;
    const MatchResult r = local_lazy_greedy(inst.graph, inst.b, f);
    ASSERT_GE(evaluate_matching(r.edges, inst.graph, f), opt / 2.0 - 1e-9);
    const Assignment a = assignment_from_matching(tasks, inst, r.edges);
    for (std::size_t m : a.machine_of) ASSERT_NE(m, kUnassigned);
  }
}

TEST(Capacity, AutoModeRespectsMessageBound) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t machines = 1 + trial % 7;
    const TaskSet tasks = lognormal_tasks(10 + trial * 3, 0.0, 1.0, trial);
    const Assignment a = assign(tasks, machines, 0.5);
    const std::size_t cap = (tasks.loads.size() + machines - 1) / machines;
    for (std::size_t count : a.messages) EXPECT_LE(count, cap);
    for (std::size_t m : a.machine_of) EXPECT_NE(m, kUnassigned);
    double total = 0.0;
    for (double l : a.machine_loads) total += l;
    double expected = 0.0;
    for (double l : tasks.loads) expected += l;
    EXPECT_NEAR(total, expected, 1e-9 * expected);
  }
}

TEST(Workloads, LognormalSuiteBeatsRoundRobin) {
  std::vector<double> sub, rr;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const TaskSet tasks = lognormal_tasks(1000, 0.0, 1.0, seed);
    sub.push_back(load_stats(assign(tasks, 16, 0.5)).cv);
    rr.push_back(load_stats(baseline_assign(tasks, 16, BaselinePolicy::kRoundRobin)).cv);
  }
  std::nth_element(sub.begin(), sub.begin() + 10, sub.end());
  std::nth_element(rr.begin(), rr.begin() + 10, rr.end());
  EXPECT_LT(sub[10], rr[10]);
}

TEST(Workloads, LognormalDeterministic) {
  EXPECT_EQ(lognormal_tasks(50, 1.0, 0.5, 9).loads, lognormal_tasks(50, 1.0, 0.5, 9).loads);
  EXPECT_NE(lognormal_tasks(50, 1.0, 0.5, 9).loads, lognormal_tasks(50, 1.0, 0.5, 10).loads);
  for (double l : lognormal_tasks(200, 0.0, 2.0, 1).loads) EXPECT_GT(l, 0.0);
}

TEST(LoadsFile, Parse) {
  std::istringstream in("300\n200\n\n100\n50\n");
  EXPECT_EQ(read_task_loads(in).loads, kBlocks.loads);
  std::istringstream negative("1\n-2\n");
  EXPECT_THROW(read_task_loads(negative), DomainError);
  std::istringstream junk("1\nabc\n");
  EXPECT_THROW(read_task_loads(junk), ParseError);
}

}  // namespace
}  // namespace sbm
