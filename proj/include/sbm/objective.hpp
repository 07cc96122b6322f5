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

#ifndef SBM_OBJECTIVE_HPP_
#define SBM_OBJECTIVE_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sbm/graph.hpp"

namespace sbm {

// S(v): summed weight of the matched edges incident on v.
class VertexLoads {
 public:
  VertexLoads() = default;
  explicit VertexLoads(std::size_t num_vertices) : sums_(num_vertices, 0.0) {}

  // Loads induced by an arbitrary edge list. Throws DomainError on ids >= m.
  static VertexLoads from_edges(const Graph& graph, std::span<const EdgeId> edges);

  double operator[](VertexId v) const { return sums_[v]; }
  std::span<const double> values() const { return sums_; }
  std::size_t size() const { return sums_.size(); }

  // Only touches the two endpoint slots, so concurrent calls on
  // vertex-disjoint edges are safe.
  void add(const Graph& graph, EdgeId e) {
    const auto [u, v] = graph.endpoints(e);
    sums_[u] += graph.weight(e);
    sums_[v] += graph.weight(e);
  }

 private:
  std::vector<double> sums_;
};

// What a gain evaluation may look at: the loads and the matched edges so far.
struct MatchView {
  const VertexLoads& loads;
  std::span<const EdgeId> edges;
};

// Normalized monotone submodular set function over edge sets.
//
// Endpoint-local objectives promise that gain(e) is determined by the loads of
// e's two endpoints, so matching an edge only changes the gains of adjacent
// edges. The heap-based algorithms require this; plain greedy does not.
class Objective {
 public:
  virtual ~Objective() = default;

  virtual std::string name() const = 0;
  virtual bool endpoint_local() const = 0;

  // f(M). Throws DomainError on out-of-range or repeated edge ids.
  virtual double evaluate(const Graph& graph, std::span<const EdgeId> edges) const = 0;

  // f(M + e) - f(M) for an unmatched e. The default takes two full
  // evaluations; endpoint-local objectives override it with an O(1) formula.
  virtual double gain(const Graph& graph, EdgeId e, const MatchView& view) const;
};

// Vertex-separable concave polynomial: sum over v of S(v)^alpha.
//
// alpha = 1 is the modular case f(M) = 2 * sum of matched weights.
class ConcavePolynomial final : public Objective {
 public:
  // Throws DomainError unless 0 <= alpha <= 1.
  explicit ConcavePolynomial(double alpha);

  double alpha() const { return alpha_; }

  std::string name() const override;
  bool endpoint_local() const override { return true; }
  double evaluate(const Graph& graph, std::span<const EdgeId> edges) const override;
  double gain(const Graph& graph, EdgeId e, const MatchView& view) const override {
    const auto [u, v] = graph.endpoints(e);
    return pair_gain(graph.weight(e), view.loads[u], view.loads[v]);
  }

  // x^alpha with 0^alpha = 0 (normalization also for alpha = 0).
  double term(double x) const;
  double pair_gain(double w, double load_u, double load_v) const;

 private:
  enum class Kind { kLinear, kSqrt, kGeneral };
  double alpha_;
  Kind kind_;
};

// (S(u)+w)^alpha - S(u)^alpha + (S(v)+w)^alpha - S(v)^alpha.
double concave_gain(double w, double load_u, double load_v, double alpha);

// f(M) with range checking on the ids.
double evaluate_matching(std::span<const EdgeId> edges, const Graph& graph,
                         const Objective& objective);

struct SubmodularityCounterexample {
  std::vector<EdgeId> smaller;  // A
  std::vector<EdgeId> larger;   // B, a superset of A
  EdgeId edge;                  // e, not in B
  double gain_smaller;
  double gain_larger;
};

struct SubmodularityReport {
  bool passed = true;
  std::size_t comparisons = 0;
  // max over samples of |gain_e(A) - gain_e(B)|
  double max_gap = 0.0;
  std::optional<SubmodularityCounterexample> counterexample;
};

// Samples nested edge sets A within B and an edge e outside B, comparing
// f(A+e)-f(A) against f(B+e)-f(B) computed through evaluate(). Fails on the
// first sample where diminishing returns or monotonicity is violated by more
// than 1e-9.
SubmodularityReport check_submodularity(const Objective& objective, const Graph& graph,
                                        std::size_t trials, std::uint64_t seed);

}  // namespace sbm

#endif  // SBM_OBJECTIVE_HPP_
