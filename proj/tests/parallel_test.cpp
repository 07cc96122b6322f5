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

#include <random>
#include <vector>

#include "sbm/errors.hpp"
#include "sbm/parallel.hpp"
#include "test_support.hpp"

namespace sbm {
namespace {

void expect_same_trace(const MatchResult& a, const MatchResult& b) {
  ASSERT_EQ(a.trace.size(), b.trace.size());
  for (std::size_t i = 0; i < a.trace.size(); ++i) {
    EXPECT_EQ(a.trace[i].edge, b.trace[i].edge) << i;
    EXPECT_EQ(a.trace[i].round, b.trace[i].round) << i;
    EXPECT_EQ(a.trace[i].gain, b.trace[i].gain) << i;
  }
}

TEST(ParallelLlg, SingleThreadMatchesSerial) {
  const Graph g = assign_random_weights(generate_rmat(RmatParams::g500(9, 8, 4)), 1, 5, 4);
  const BVector b = make_b_vector(g, 3);
  const ConcavePolynomial f(0.5);
  const MatchResult serial = local_lazy_greedy(g, b, f);
  const MatchResult one = parallel_local_lazy_greedy(g, b, f, {1, 64});
  EXPECT_EQ(one.edges, serial.edges);
  expect_same_trace(one, serial);
  EXPECT_EQ(one.stats.per_round_matches, serial.stats.per_round_matches);
}

TEST(ParallelLlg, ThreadCountsAgree) {
  const Graph g = assign_random_weights(generate_rmat(RmatParams::g500(10, 16, 2)), 1, 5, 9);
  const BVector b = make_b_vector(g, 5);
  const ConcavePolynomial f(0.5);
  const MatchResult serial = local_lazy_greedy(g, b, f);
  for (int threads : {2, 4, 8}) {
    for (int chunk : {1, 7, 64}) {
      const MatchResult r = parallel_local_lazy_greedy(g, b, f, {threads, chunk});
      EXPECT_EQ(r.edges, serial.edges) << threads << "/" << chunk;
      expect_same_trace(r, serial);
      EXPECT_LE(r.stats.pushes, g.num_edges() * (2 * b.beta() + 1));
    }
  }
}

TEST(ParallelLlg, RandomSmallInstances) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 100; ++trial) {
    const auto inst = testing::random_small_instance(rng);
    const ConcavePolynomial f(inst.alpha);
    const MatchResult serial = local_lazy_greedy(inst.graph, inst.b, f);
    const MatchResult par = parallel_local_lazy_greedy(inst.graph, inst.b, f, {4, 1});
    ASSERT_EQ(par.edges, serial.edges);
    for (std::size_t k : par.stats.per_round_matches) EXPECT_GE(k, 1u);
    EXPECT_LE(par.stats.rounds, static_cast<std::size_t>(inst.b.total()));
  }
}

TEST(ParallelLlg, DisjointEdgesInRoundOne) {
  const Graph g = testing::graph_of(4, {{0, 1, 3.0}, {2, 3, 1.0}});
  const MatchResult r =
      parallel_local_lazy_greedy(g, make_b_vector(g, 1), ConcavePolynomial(0.5), {2, 64});
  EXPECT_EQ(r.edges, (std::vector<EdgeId>{0, 1}));
  EXPECT_EQ(r.stats.per_round_matches, std::vector<std::size_t>{2});
}

TEST(ParallelLlg, RejectsBadConfig) {
  const Graph g = testing::graph_of(2, {{0, 1, 1.0}});
  const BVector b = make_b_vector(g, 1);
  const ConcavePolynomial f(0.5);
  EXPECT_THROW(parallel_local_lazy_greedy(g, b, f, {0, 64}), DomainError);
  EXPECT_THROW(parallel_local_lazy_greedy(g, b, f, {2, 0}), DomainError);
}

}  // namespace
}  // namespace sbm
