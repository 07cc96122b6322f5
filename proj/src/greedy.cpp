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
#include <cmath>
#include <string>

#include "sbm/errors.hpp"
#include "sbm/matching.hpp"
#include "stopwatch.hpp"

namespace sbm {

MatchingState::MatchingState(const Graph& graph, const BVector& b)
    : graph_(&graph),
      matched_(graph.num_edges(), 0),
      residual_(b.values().begin(), b.values().end()),
      loads_(graph.num_vertices()) {
  if (b.size() != graph.num_vertices()) {
    throw DomainError("b vector does not match the graph's vertex count");
  }
}

double MatchingState::gain(const Objective& objective, EdgeId e) const {
  const double g = objective.gain(*graph_, e, MatchView{loads_, order_});
  if (!std::isfinite(g) || g < 0.0) {
    throw DomainError(objective.name() + " returned gain " + std::to_string(g) +
                      " for edge " + std::to_string(e));
  }
  return g;
}

void MatchingState::commit(EdgeId e) {
  const auto [u, v] = graph_->endpoints(e);
  matched_[e] = 1;
  --residual_[u];
  --residual_[v];
  loads_.add(*graph_, e);
}

void MatchingState::record(EdgeId e, double gain, std::size_t round) {
  order_.push_back(e);
  trace_.push_back({e, gain, round});
}

void MatchingState::match(EdgeId e, double gain, std::size_t round) {
  if (!available(e)) throw DomainError("edge " + std::to_string(e) + " is not available");
  commit(e);
  record(e, gain, round);
}

MatchResult MatchingState::release(RunStats stats) && {
  MatchResult out;
  out.edges = order_;
  std::sort(out.edges.begin(), out.edges.end());
  out.trace = std::move(trace_);
  out.stats = std::move(stats);
  return out;
}

void require_endpoint_local(const Objective& objective) {
  if (!objective.endpoint_local()) {
    throw DomainError(objective.name() +
                      " is not endpoint-local; only plain greedy accepts it");
  }
}

std::optional<HeapEntry> lazy_evaluate(GainHeap& heap, const MatchingState& state,
                                       const Objective& objective, RunStats& stats) {
  while (!heap.empty()) {
    const HeapEntry top = heap.top();
    if (!state.available(top.edge)) {
      heap.pop();
      continue;
    }
    const double g = state.gain(objective, top.edge);
    ++stats.gain_evaluations;
    if (g >= top.gain) {
      if (g > top.gain) heap.raise_top(g);
      return heap.top();
    }
    heap.pop();
    const HeapEntry fresh{g, top.edge};
    heap.push(fresh);
    if (heap.top().edge == fresh.edge) return fresh;
  }
  return std::nullopt;
}

MatchResult greedy(const Graph& graph, const BVector& b, const Objective& objective) {
  internal::Stopwatch clock;
  MatchingState state(graph, b);
  RunStats stats;
  stats.init_ms = clock.lap();
  for (std::size_t step = 1;; ++step) {
    std::optional<HeapEntry> best;
    for (EdgeId e = 0; e < graph.num_edges(); ++e) {
      if (!state.available(e)) continue;
      const HeapEntry candidate{state.gain(objective, e), e};
      ++stats.gain_evaluations;
      if (!best || ranks_above(candidate, *best)) best = candidate;
    }
    if (!best) break;
    state.match(best->edge, best->gain, step);
    stats.per_round_matches.push_back(1);
  }
  stats.rounds = state.cardinality();
  stats.main_ms = clock.lap();
  return std::move(state).release(std::move(stats));
}

MatchResult lazy_greedy(const Graph& graph, const BVector& b, const Objective& objective) {
  require_endpoint_local(objective);
  internal::Stopwatch clock;
  MatchingState state(graph, b);
  RunStats stats;

  // Normalized objective: the first gain of an edge is f({e}).
  std::vector<HeapEntry> storage;
  storage.reserve(graph.num_edges());
  for (EdgeId e = 0; e < graph.num_edges(); ++e) {
    if (!state.available(e)) continue;
    storage.push_back({state.gain(objective, e), e});
  }
  stats.gain_evaluations = storage.size();
  GainHeap heap(storage);
  stats.init_ms = clock.lap();

  for (std::size_t step = 1;; ++step) {
    const auto best = lazy_evaluate(heap, state, objective, stats);
    if (!best) break;
    heap.pop();
    state.match(best->edge, best->gain, step);
    stats.per_round_matches.push_back(1);
  }
  stats.rounds = state.cardinality();
  stats.pushes = heap.pushes();
  stats.pops = heap.pops();
  stats.main_ms = clock.lap();
  return std::move(state).release(std::move(stats));
}

}  // namespace sbm
