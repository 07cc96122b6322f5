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

#include "sbm/parallel.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <memory>
#include <utility>

#include "llg_core.hpp"
#include "sbm/errors.hpp"
#include "stopwatch.hpp"

namespace sbm {
namespace {

// Per-vertex test-and-set flags. Cleared only for the vertices that were
// claimed, so a reset costs as much as the round's work.
class ClaimBits {
 public:
  explicit ClaimBits(std::size_t n) : flags_(std::make_unique<std::atomic<bool>[]>(n)) {
    for (std::size_t i = 0; i < n; ++i) flags_[i].store(false, std::memory_order_relaxed);
  }

  // True for the first caller only.
  bool claim(VertexId v) { return !flags_[v].exchange(true, std::memory_order_acq_rel); }
  void release(VertexId v) { flags_[v].store(false, std::memory_order_relaxed); }

 private:
  std::unique_ptr<std::atomic<bool>[]> flags_;
};

template <typename T>
void concatenate(std::vector<std::vector<T>>& parts, std::vector<T>& out) {
  out.clear();
  for (auto& part : parts) {
    out.insert(out.end(), part.begin(), part.end());
    part.clear();
  }
}

}  // namespace

MatchResult parallel_local_lazy_greedy(const Graph& graph, const BVector& b,
                                       const Objective& objective, const ParallelConfig& cfg) {
  if (cfg.threads < 1) throw DomainError("thread count must be at least 1");
  if (cfg.chunk < 1) throw DomainError("chunk size must be at least 1");
  const int threads = cfg.threads;
  const int chunk = cfg.chunk;
  const auto n = static_cast<std::int64_t>(graph.num_vertices());
  const auto m = static_cast<std::int64_t>(graph.num_edges());

  internal::Stopwatch clock;
  internal::LlgCore core(graph, b, objective);
  MatchingState& state = core.state();

#pragma omp parallel for num_threads(threads) schedule(static)
  for (std::int64_t e = 0; e < m; ++e) core.seed_gain(static_cast<EdgeId>(e));
#pragma omp parallel for num_threads(threads) schedule(dynamic, chunk)
  for (std::int64_t v = 0; v < n; ++v) core.build_heap(static_cast<VertexId>(v));

  RunStats stats;
  stats.gain_evaluations = graph.num_edges();
  stats.init_ms = clock.lap();

  std::vector<RunStats> worker_stats(threads);
  std::vector<std::vector<VertexId>> local_vertices(threads);
  std::vector<std::vector<std::pair<EdgeId, double>>> local_commits(threads);
  ClaimBits claimed(graph.num_vertices());

  std::vector<VertexId> potential_u;
  for (VertexId v = 0; v < graph.num_vertices(); ++v) {
    if (b[v] > 0) potential_u.push_back(v);
  }
  std::vector<VertexId> potential_m;
  std::vector<std::pair<EdgeId, double>> committed;

  while (!potential_u.empty()) {
    const auto num_u = static_cast<std::int64_t>(potential_u.size());

    // Update phase: matching state is read-only.
#pragma omp parallel num_threads(threads)
    {
      const int tid = omp_get_thread_num();
#pragma omp for schedule(dynamic, chunk)
      for (std::int64_t i = 0; i < num_u; ++i) {
        const VertexId v = potential_u[i];
        if (!claimed.claim(v)) continue;
        if (core.refresh(v, worker_stats[tid])) local_vertices[tid].push_back(v);
      }
#pragma omp for schedule(static)
      for (std::int64_t i = 0; i < num_u; ++i) claimed.release(potential_u[i]);
    }
    concatenate(local_vertices, potential_m);
    const auto num_m = static_cast<std::int64_t>(potential_m.size());

    // Matching phase: pointers are read-only; each mutual pair has one
    // committer.
#pragma omp parallel num_threads(threads)
    {
      const int tid = omp_get_thread_num();
#pragma omp for schedule(dynamic, chunk)
      for (std::int64_t i = 0; i < num_m; ++i) {
        const VertexId u = potential_m[i];
        const EdgeId e = core.committer(u);
        if (e != kNoEdge) local_commits[tid].emplace_back(e, core.pointer_gain(u));
      }
#pragma omp for schedule(static)
      for (std::int64_t i = 0; i < num_m; ++i) core.clear_candidate(potential_m[i]);
    }
    concatenate(local_commits, committed);
    if (committed.empty()) break;
    std::sort(committed.begin(), committed.end());
    const auto num_c = static_cast<std::int64_t>(committed.size());

    // Committed pairs are vertex-disjoint.
#pragma omp parallel for num_threads(threads) schedule(static)
    for (std::int64_t i = 0; i < num_c; ++i) state.commit(committed[i].first);

    ++stats.rounds;
    for (const auto& [e, gain] : committed) state.record(e, gain, stats.rounds);
    stats.per_round_matches.push_back(committed.size());

#pragma omp parallel num_threads(threads)
    {
      const int tid = omp_get_thread_num();
#pragma omp for schedule(dynamic, chunk)
      for (std::int64_t i = 0; i < num_c; ++i) core.affected(committed[i].first, local_vertices[tid]);
    }
    concatenate(local_vertices, potential_u);
  }

  for (const auto& ws : worker_stats) stats.gain_evaluations += ws.gain_evaluations;
  stats.pushes = core.pushes();
  stats.pops = core.pops();
  stats.main_ms = clock.lap();
  return std::move(state).release(std::move(stats));
}

}  // namespace sbm
