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

#include "llg_core.hpp"

#include <numeric>

namespace sbm::internal {

LlgCore::LlgCore(const Graph& graph, const BVector& b, const Objective& objective)
    : graph_(graph),
      objective_(objective),
      state_(graph, b),
      seed_gain_(graph.num_edges(), 0.0),
      offsets_(graph.num_vertices() + 1, 0),
      heaps_(graph.num_vertices()),
      pointer_(graph.num_vertices(), kNoEdge),
      pointer_gain_(graph.num_vertices(), 0.0),
      candidate_(graph.num_vertices(), 0) {
  require_endpoint_local(objective);
  for (VertexId v = 0; v < graph.num_vertices(); ++v) {
    std::size_t live = 0;
    for (const auto& inc : graph.incident(v)) live += state_.available(inc.edge) ? 1 : 0;
    offsets_[v + 1] = offsets_[v] + live;
  }
  storage_.resize(offsets_.back());
}

void LlgCore::seed_gain(EdgeId e) {
  if (state_.available(e)) seed_gain_[e] = state_.gain(objective_, e);
}

void LlgCore::build_heap(VertexId v) {
  std::size_t slot = offsets_[v];
  for (const auto& inc : graph_.incident(v)) {
    if (state_.available(inc.edge)) storage_[slot++] = {seed_gain_[inc.edge], inc.edge};
  }
  heaps_[v] = GainHeap(std::span(storage_.data() + offsets_[v], slot - offsets_[v]));
}

bool LlgCore::refresh(VertexId v, RunStats& stats) {
  std::optional<HeapEntry> best;
  if (state_.residual(v) > 0) best = lazy_evaluate(heaps_[v], state_, objective_, stats);
  pointer_[v] = best ? best->edge : kNoEdge;
  pointer_gain_[v] = best ? best->gain : 0.0;
  candidate_[v] = best ? 1 : 0;
  return best.has_value();
}

EdgeId LlgCore::committer(VertexId u) const {
  const EdgeId e = pointer_[u];
  if (e == kNoEdge) return kNoEdge;
  const VertexId v = graph_.other(e, u);
  if (pointer_[v] != e) return kNoEdge;
  if (candidate_[v] && v < u) return kNoEdge;
  return e;
}

void LlgCore::affected(EdgeId e, std::vector<VertexId>& out) const {
  const auto [u, v] = graph_.endpoints(e);
  for (VertexId end : {u, v}) {
    if (state_.residual(end) > 0) out.push_back(end);
    for (const auto& inc : graph_.incident(end)) {
      // Only neighbours pointing across this endpoint can see their best
      // edge change; every other incident gain of theirs is untouched.
      if (pointer_[inc.neighbor] == inc.edge && !state_.matched(inc.edge)) {
        out.push_back(inc.neighbor);
      }
    }
  }
}

std::uint64_t LlgCore::pushes() const {
  return std::accumulate(heaps_.begin(), heaps_.end(), std::uint64_t{0},
                         [](std::uint64_t acc, const GainHeap& h) { return acc + h.pushes(); });
}

std::uint64_t LlgCore::pops() const {
  return std::accumulate(heaps_.begin(), heaps_.end(), std::uint64_t{0},
                         [](std::uint64_t acc, const GainHeap& h) { return acc + h.pops(); });
}

}  // namespace sbm::internal
