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

#ifndef SBM_SRC_LLG_CORE_HPP_
#define SBM_SRC_LLG_CORE_HPP_

#include <vector>

#include "sbm/gain_heap.hpp"
#include "sbm/matching.hpp"

namespace sbm::internal {

// Per-vertex heaps and pointers shared by the serial and the phase-parallel
// Local Lazy Greedy drivers.
//
// Phase contract: refresh() may run concurrently for distinct vertices while
// the matching state is read-only; committer() may run concurrently once all
// refreshes of the round are done; affected() may run concurrently after the
// round's commits.
class LlgCore {
 public:
  LlgCore(const Graph& graph, const BVector& b, const Objective& objective);

  MatchingState& state() { return state_; }
  const MatchingState& state() const { return state_; }
  std::size_t num_seed_edges() const { return seed_gain_.size(); }

  // Initialization, two passes: seed_gain() for every edge, then
  // build_heap() for every vertex.
  void seed_gain(EdgeId e);
  void build_heap(VertexId v);

  // Update step: points v at its best available incident edge. Returns true
  // (and flags v as a candidate for this round) when such an edge exists.
  bool refresh(VertexId v, RunStats& stats);

  // Matching step for candidate u: the mutually pointed edge if u is the
  // designated committer of the pair, otherwise kNoEdge. The smaller endpoint
  // commits unless only the larger one was refreshed this round.
  EdgeId committer(VertexId u) const;
  double pointer_gain(VertexId v) const { return pointer_gain_[v]; }
  void clear_candidate(VertexId v) { candidate_[v] = 0; }

  // Vertices whose best incident edge may have changed after e was matched:
  // unsaturated endpoints and every unsaturated neighbour across an unmatched
  // edge. Duplicates are left to the consumer.
  void affected(EdgeId e, std::vector<VertexId>& out) const;

  std::uint64_t pushes() const;
  std::uint64_t pops() const;

 private:
  const Graph& graph_;
  const Objective& objective_;
  MatchingState state_;
  std::vector<double> seed_gain_;
  std::vector<std::size_t> offsets_;
  std::vector<HeapEntry> storage_;
  std::vector<GainHeap> heaps_;
  std::vector<EdgeId> pointer_;
  std::vector<double> pointer_gain_;
  std::vector<char> candidate_;
};

}  // namespace sbm::internal

#endif  // SBM_SRC_LLG_CORE_HPP_
