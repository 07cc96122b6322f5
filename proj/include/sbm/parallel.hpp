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

#ifndef SBM_PARALLEL_HPP_
#define SBM_PARALLEL_HPP_

#include "sbm/matching.hpp"

namespace sbm {

struct ParallelConfig {
  int threads = 1;
  int chunk = 64;  // grain of the dynamically scheduled vertex loops
};

// Phase-synchronous parallel Local Lazy Greedy.
//
// Each round runs a parallel update phase over the PotentialU worklist and a
// parallel matching phase over the candidates it produced, separated by
// barriers. Workers claim vertices with an atomic test-and-set, so every
// vertex heap has a single writer per phase. Commits within a round are
// applied in edge id order, which makes the matching and the trace
// independent of the thread count and equal to local_lazy_greedy().
//
// Throws DomainError when cfg.threads < 1 or cfg.chunk < 1.
MatchResult parallel_local_lazy_greedy(const Graph& graph, const BVector& b,
                                       const Objective& objective, const ParallelConfig& cfg);

}  // namespace sbm

#endif  // SBM_PARALLEL_HPP_
