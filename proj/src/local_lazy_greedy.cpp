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
#include <utility>

#include "llg_core.hpp"
#include "sbm/matching.hpp"
#include "stopwatch.hpp"

namespace sbm {

MatchResult local_lazy_greedy(const Graph& graph, const BVector& b,
                              const Objective& objective) {
  internal::Stopwatch clock;
  internal::LlgCore core(graph, b, objective);
  RunStats stats;
  for (EdgeId e = 0; e < graph.num_edges(); ++e) core.seed_gain(e);
  for (VertexId v = 0; v < graph.num_vertices(); ++v) core.build_heap(v);
  stats.gain_evaluations = graph.num_edges();
  stats.init_ms = clock.lap();

  // PotentialU / PotentialM worklists; duplicates in PotentialU are filtered
  // through `seen` during the update step.
  std::vector<VertexId> potential_u;
  for (VertexId v = 0; v < graph.num_vertices(); ++v) {
    if (b[v] > 0) potential_u.push_back(v);
  }
  std::vector<VertexId> potential_m;
  std::vector<char> seen(graph.num_vertices(), 0);
  std::vector<std::pair<EdgeId, double>> committed;
  MatchingState& state = core.state();

  while (!potential_u.empty()) {
    potential_m.clear();
    for (VertexId v : potential_u) {
      if (seen[v]) continue;
      seen[v] = 1;
      if (core.refresh(v, stats)) potential_m.push_back(v);
    }
    for (VertexId v : potential_u) seen[v] = 0;

    committed.clear();
    for (VertexId u : potential_m) {
      const EdgeId e = core.committer(u);
      if (e != kNoEdge) committed.emplace_back(e, core.pointer_gain(u));
    }
    for (VertexId u : potential_m) core.clear_candidate(u);
    if (committed.empty()) break;

    std::sort(committed.begin(), committed.end());
    ++stats.rounds;
    for (const auto& [e, gain] : committed) state.match(e, gain, stats.rounds);
    stats.per_round_matches.push_back(committed.size());

    potential_u.clear();
    for (const auto& [e, gain] : committed) core.affected(e, potential_u);
  }
  stats.pushes = core.pushes();
  stats.pops = core.pops();
  stats.main_ms = clock.lap();
  return std::move(state).release(std::move(stats));
}

}  // namespace sbm
