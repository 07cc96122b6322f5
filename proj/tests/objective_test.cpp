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
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "sbm/errors.hpp"
#include "sbm/matching.hpp"
#include "sbm/objective.hpp"
#include "test_support.hpp"

namespace sbm {
namespace {

// sum_v S(v)^2: supermodular, used to make sure the checker can say no.
class SquaredLoads final : public Objective {
 public:
  std::string name() const override { return "squared"; }
  bool endpoint_local() const override { return false; }
  double evaluate(const Graph& graph, std::span<const EdgeId> edges) const override {
    const VertexLoads loads = VertexLoads::from_edges(graph, edges);
    double total = 0.0;
    for (double s : loads.values()) total += s * s;
    return total;
  }
};

double gain_given(const Objective& f, const Graph& g, std::vector<EdgeId> base, EdgeId e) {
  const double before = f.evaluate(g, base);
  base.push_back(e);
  return f.evaluate(g, base) - before;
}

TEST(ConcaveGain, Examples) {
  EXPECT_DOUBLE_EQ(concave_gain(4.0, 0.0, 0.0, 0.5), 4.0);
  EXPECT_NEAR(concave_gain(100.0, 300.0, 0.0, 0.5), 12.679491924311225, 1e-12);
  EXPECT_EQ(concave_gain(3.0, 17.25, 0.5, 1.0), 6.0);
  EXPECT_EQ(concave_gain(3.0, 0.0, 0.0, 0.0), 2.0);
  EXPECT_THROW(concave_gain(1.0, 0.0, 0.0, 1.5), DomainError);
  EXPECT_THROW(concave_gain(1.0, 0.0, 0.0, -0.1), DomainError);
  EXPECT_THROW(ConcavePolynomial(2.0), DomainError);
}

TEST(Evaluate, Examples) {
  const ConcavePolynomial f(0.5);
  const Graph single = testing::graph_of(2, {{0, 1, 9.0}});
  EXPECT_EQ(evaluate_matching({}, single, f), 0.0);
  const std::vector<EdgeId> one{0};
  EXPECT_DOUBLE_EQ(evaluate_matching(one, single, f), 6.0);

  // Star centre 0 with leaves 1 and 2.
  const Graph star = testing::graph_of(3, {{0, 1, 300.0}, {0, 2, 50.0}});
  const std::vector<EdgeId> both{0, 1};
  const double value = evaluate_matching(both, star, f);
  EXPECT_NEAR(value, 43.099862821423955, 1e-12);
  EXPECT_NEAR(value, std::sqrt(350.0) + std::sqrt(300.0) + std::sqrt(50.0), 1e-12);
  const double forward = gain_given(f, star, {}, 0) + gain_given(f, star, {0}, 1);
  const double backward = gain_given(f, star, {}, 1) + gain_given(f, star, {1}, 0);
  EXPECT_NEAR(forward, value, 1e-12);
  EXPECT_NEAR(backward, value, 1e-12);

  const std::vector<EdgeId> bad{5};
  EXPECT_THROW(evaluate_matching(bad, single, f), DomainError);
  const std::vector<EdgeId> repeated{0, 0};
  EXPECT_THROW(evaluate_matching(repeated, single, f), DomainError);
}

TEST(Objective, TelescopingProperty) {
  std::mt19937_64 rng(3);
  const double alphas[] = {0.0, 0.3, 0.5, 0.77, 1.0};
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = testing::random_graph(rng, 8, 20, 0.5, 50.0);
    const ConcavePolynomial f(alphas[trial % 5]);
    std::vector<EdgeId> s;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      if (rng() & 1) s.push_back(e);
    }
    const double whole = f.evaluate(g, s);
    for (int perm = 0; perm < 4; ++perm) {
      std::shuffle(s.begin(), s.end(), rng);
      VertexLoads loads(g.num_vertices());
      std::vector<EdgeId> prefix;
      double sum = 0.0;
      for (EdgeId e : s) {
        sum += f.gain(g, e, MatchView{loads, prefix});
        loads.add(g, e);
        prefix.push_back(e);
      }
      ASSERT_LE(testing::relative_difference(sum, whole), 1e-9);
    }
  }
}

TEST(Objective, IncrementalLoadsMatchRecompute) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = testing::random_graph(rng, 10, 30, 0.1, 1000.0);
    VertexLoads loads(g.num_vertices());
    std::vector<EdgeId> order(g.num_edges());
    std::iota(order.begin(), order.end(), EdgeId{0});
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<EdgeId> inserted;
    for (EdgeId e : order) {
      loads.add(g, e);
      inserted.push_back(e);
      const VertexLoads fresh = VertexLoads::from_edges(g, inserted);
      for (VertexId v = 0; v < g.num_vertices(); ++v) {
        ASSERT_LE(testing::relative_difference(loads[v], fresh[v]), 1e-12);
      }
    }
  }
}

TEST(Objective, GainDependsOnlyOnAdjacentEdges) {
  std::mt19937_64 rng(8);
  const ConcavePolynomial f(0.5);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = testing::random_graph(rng, 9, 24);
    const BVector b = make_b_vector(g, 3);
    MatchingState state(g, b);
    std::vector<EdgeId> order(g.num_edges());
    std::iota(order.begin(), order.end(), EdgeId{0});
    std::shuffle(order.begin(), order.end(), rng);
    for (EdgeId picked : order) {
      if (!state.available(picked)) continue;
      std::vector<double> before(g.num_edges());
      for (EdgeId e = 0; e < g.num_edges(); ++e) before[e] = state.gain(f, e);
      state.match(picked, before[picked], 1);
      const auto [pu, pv] = g.endpoints(picked);
      for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const auto [u, v] = g.endpoints(e);
        const bool adjacent = u == pu || u == pv || v == pu || v == pv;
        if (!adjacent) {
          ASSERT_EQ(state.gain(f, e), before[e]);
        }
      }
    }
  }
}

TEST(Objective, DefaultGainFallsBackToEvaluation) {
  const SquaredLoads f;
  const Graph g = testing::graph_of(3, {{0, 1, 2.0}, {1, 2, 3.0}});
  VertexLoads loads(3);
  loads.add(g, 0);
  const std::vector<EdgeId> matched{0};
  // (2+3)^2 - 2^2 + 3^2 = 30
  EXPECT_DOUBLE_EQ(f.gain(g, 1, MatchView{loads, matched}), 30.0);
}

TEST(Submodularity, ConcavePasses) {
  std::mt19937_64 rng(13);
  for (double alpha : {0.0, 0.25, 0.5, 0.9}) {
    const Graph g = testing::random_graph(rng, 7, 14);
    const auto report = check_submodularity(ConcavePolynomial(alpha), g, 500, 1);
    EXPECT_TRUE(report.passed) << alpha;
    EXPECT_GT(report.comparisons, 0u);
    EXPECT_FALSE(report.counterexample.has_value());
  }
}

TEST(Submodularity, ModularHasEqualGains) {
  std::mt19937_64 rng(17);
  const Graph g = testing::random_graph(rng, 7, 14);
  const auto report = check_submodularity(ConcavePolynomial(1.0), g, 500, 2);
  EXPECT_TRUE(report.passed);
  EXPECT_LE(report.max_gap, 1e-9);
}

TEST(Submodularity, SquaredLoadsFailsWithRealCounterexample) {
  const SquaredLoads f;
  std::mt19937_64 rng(19);
  const Graph g = testing::random_graph(rng, 6, 10);
  const auto report = check_submodularity(f, g, 500, 3);
  ASSERT_FALSE(report.passed);
  ASSERT_TRUE(report.counterexample.has_value());
  const auto& cx = *report.counterexample;
  for (EdgeId e : cx.smaller) {
    EXPECT_NE(std::find(cx.larger.begin(), cx.larger.end(), e), cx.larger.end());
  }
  EXPECT_EQ(std::find(cx.larger.begin(), cx.larger.end(), cx.edge), cx.larger.end());
  const double small = gain_given(f, g, cx.smaller, cx.edge);
  const double large = gain_given(f, g, cx.larger, cx.edge);
  EXPECT_NEAR(small, cx.gain_smaller, 1e-9);
  EXPECT_NEAR(large, cx.gain_larger, 1e-9);
  EXPECT_LT(small, large - 1e-9);
}

}  // namespace
}  // namespace sbm
