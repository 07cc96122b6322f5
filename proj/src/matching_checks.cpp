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

#include <algorithm>
#include <string>

#include "sbm/errors.hpp"
#include "sbm/matching.hpp"

namespace sbm {

VerifyReport verify_matching(const Graph& graph, const BVector& b,
                             std::span<const EdgeId> edges) {
  std::vector<char> in_matching(graph.num_edges(), 0);
  std::vector<std::int64_t> degree(graph.num_vertices(), 0);
  for (EdgeId e : edges) {
    if (e >= graph.num_edges()) {
      throw DomainError("unknown edge id " + std::to_string(e));
    }
    if (in_matching[e]) throw DomainError("edge id " + std::to_string(e) + " listed twice");
    in_matching[e] = 1;
    const auto [u, v] = graph.endpoints(e);
    ++degree[u];
    ++degree[v];
  }
  VerifyReport report;
  for (VertexId v = 0; v < graph.num_vertices(); ++v) {
    if (degree[v] > b[v]) report.over_capacity.push_back(v);
  }
  for (EdgeId e = 0; e < graph.num_edges(); ++e) {
    const auto [u, v] = graph.endpoints(e);
    if (!in_matching[e] && degree[u] < b[u] && degree[v] < b[v]) report.addable.push_back(e);
  }
  report.feasible = report.over_capacity.empty();
  report.maximal = report.addable.empty();
  return report;
}

namespace {

class Enumerator {
 public:
  Enumerator(const Graph& graph, const BVector& b, const Objective& objective)
      : graph_(graph), objective_(objective), residual_(b.values().begin(), b.values().end()) {}

  OptimalMatching run() {
    best_.value = objective_.evaluate(graph_, {});
    visit(0);
    return best_;
  }

 private:
  void visit(EdgeId next) {
    if (next == graph_.num_edges()) {
      const double value = objective_.evaluate(graph_, chosen_);
      if (value > best_.value) {
        best_.value = value;
        best_.edges = chosen_;
      }
      return;
    }
    const auto [u, v] = graph_.endpoints(next);
    if (residual_[u] > 0 && residual_[v] > 0) {
      --residual_[u];
      --residual_[v];
      chosen_.push_back(next);
      visit(next + 1);
      chosen_.pop_back();
      ++residual_[u];
      ++residual_[v];
    }
    visit(next + 1);
  }

  const Graph& graph_;
  const Objective& objective_;
  std::vector<int> residual_;
  std::vector<EdgeId> chosen_;
  OptimalMatching best_;
};

}  // namespace

OptimalMatching brute_force_optimal(const Graph& graph, const BVector& b,
                                    const Objective& objective) {
  if (graph.num_edges() > kBruteForceEdgeLimit) {
    throw SizeError("brute force limited to " + std::to_string(kBruteForceEdgeLimit) +
                    " edges, graph has " + std::to_string(graph.num_edges()));
  }
  return Enumerator(graph, b, objective).run();
}

DominanceReport audit_local_dominance(const Graph& graph, const BVector& b,
                                      const Objective& objective, const MatchTrace& trace,
                                      double epsilon) {
  if (!(epsilon > 0.0 && epsilon <= 1.0)) throw DomainError("epsilon must lie in (0,1]");
  MatchingState state(graph, b);
  DominanceReport report;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const EdgeId e = trace[i].edge;
    if (e >= graph.num_edges() || !state.available(e)) {
      throw DomainError("trace entry " + std::to_string(i) + " inserts unavailable edge " +
                        std::to_string(e));
    }
    const double g = state.gain(objective, e);
    const auto [u, v] = graph.endpoints(e);
    for (VertexId end : {u, v}) {
      for (const auto& inc : graph.incident(end)) {
        if (inc.edge == e || !state.available(inc.edge)) continue;
        const double rival = state.gain(objective, inc.edge);
        if (g < epsilon * rival - 1e-9) {
          report.passed = false;
          report.violation_index = i;
          report.gain = g;
          report.best_adjacent = rival;
          report.rival = inc.edge;
          return report;
        }
      }
    }
    state.match(e, g, trace[i].round);
  }
  return report;
}

}  // namespace sbm
