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

#ifndef SBM_MATCHING_HPP_
#define SBM_MATCHING_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sbm/gain_heap.hpp"
#include "sbm/graph.hpp"
#include "sbm/objective.hpp"

namespace sbm {

struct TraceEntry {
  EdgeId edge;
  double gain;        // marginal gain at the moment of insertion
  std::size_t round;  // 1-based; one round per insertion for (lazy) greedy
};

// Insertion order of the matched edges.
using MatchTrace = std::vector<TraceEntry>;

struct RunStats {
  std::uint64_t pushes = 0;
  std::uint64_t pops = 0;
  std::uint64_t gain_evaluations = 0;
  std::size_t rounds = 0;
  std::vector<std::size_t> per_round_matches;
  double init_ms = 0.0;
  double main_ms = 0.0;
};

struct MatchResult {
  std::vector<EdgeId> edges;  // sorted by id
  MatchTrace trace;
  RunStats stats;
};

// Matched edges, residual capacities and loads for one run.
class MatchingState {
 public:
  MatchingState(const Graph& graph, const BVector& b);

  const Graph& graph() const { return *graph_; }
  bool matched(EdgeId e) const { return matched_[e] != 0; }
  int residual(VertexId v) const { return residual_[v]; }
  const VertexLoads& loads() const { return loads_; }
  const MatchTrace& trace() const { return trace_; }
  std::span<const EdgeId> edges() const { return order_; }
  std::size_t cardinality() const { return order_.size(); }

  // Unmatched with both endpoints unsaturated.
  bool available(EdgeId e) const {
    const auto [u, v] = graph_->endpoints(e);
    return !matched_[e] && residual_[u] > 0 && residual_[v] > 0;
  }

  // Marginal gain of e now. Throws DomainError if the objective returns a
  // negative or non-finite value.
  double gain(const Objective& objective, EdgeId e) const;

  // commit() + record().
  void match(EdgeId e, double gain, std::size_t round);

  // Marks e matched and updates residuals and loads of its endpoints only;
  // safe to call concurrently for vertex-disjoint edges. Does not log.
  void commit(EdgeId e);
  // Appends e to the trace. Not thread-safe.
  void record(EdgeId e, double gain, std::size_t round);

  MatchResult release(RunStats stats) &&;

 private:
  const Graph* graph_;
  std::vector<char> matched_;
  std::vector<int> residual_;
  VertexLoads loads_;
  std::vector<EdgeId> order_;
  MatchTrace trace_;
};

// Throws DomainError unless the objective is endpoint-local.
void require_endpoint_local(const Objective& objective);

// Returns the best available edge of `heap` with a freshly computed gain and
// leaves it on top. Popped unavailable edges are dropped for good; stale
// entries are re-pushed with their recomputed gain.
std::optional<HeapEntry> lazy_evaluate(GainHeap& heap, const MatchingState& state,
                                       const Objective& objective, RunStats& stats);

// Scans every available edge per step and adds the best one.
MatchResult greedy(const Graph& graph, const BVector& b, const Objective& objective);

// One global heap with lazily refreshed keys. Requires an endpoint-local
// objective.
MatchResult lazy_greedy(const Graph& graph, const BVector& b, const Objective& objective);

// Per-vertex heaps; each round refreshes the best incident edge of every
// vertex whose neighbourhood changed, then matches mutually best pairs.
MatchResult local_lazy_greedy(const Graph& graph, const BVector& b,
                              const Objective& objective);

struct VerifyReport {
  bool feasible = true;
  bool maximal = true;
  std::vector<VertexId> over_capacity;
  std::vector<EdgeId> addable;  // available edges left outside M
};

// Throws DomainError on ids >= m or repeated ids.
VerifyReport verify_matching(const Graph& graph, const BVector& b,
                             std::span<const EdgeId> edges);

struct OptimalMatching {
  std::vector<EdgeId> edges;
  double value = 0.0;
};

inline constexpr std::size_t kBruteForceEdgeLimit = 22;

// Exhaustive search over feasible edge subsets. Throws SizeError when the
// graph has more than kBruteForceEdgeLimit edges.
OptimalMatching brute_force_optimal(const Graph& graph, const BVector& b,
                                    const Objective& objective);

struct DominanceReport {
  bool passed = true;
  std::optional<std::size_t> violation_index;
  double gain = 0.0;          // gain of the violating edge
  double best_adjacent = 0.0; // best available adjacent gain at that point
  EdgeId rival = kNoEdge;
};

// Replays `trace` and checks that each inserted edge had at least epsilon
// times the gain of every available adjacent edge. Throws DomainError when
// epsilon is outside (0,1] or the trace inserts an unavailable edge.
DominanceReport audit_local_dominance(const Graph& graph, const BVector& b,
                                      const Objective& objective, const MatchTrace& trace,
                                      double epsilon);

// `u v edge_id` per line, 0-based, after a '#' header line.
void write_matching_tsv(std::ostream& out, const Graph& graph,
                        std::span<const EdgeId> edges);
// Throws ParseError on malformed lines, DomainError when an edge id is unknown
// or its endpoints disagree with the graph.
std::vector<EdgeId> read_matching_tsv(std::istream& in, const Graph& graph);

}  // namespace sbm

#endif  // SBM_MATCHING_HPP_
