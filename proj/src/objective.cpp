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

#include "sbm/objective.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "sbm/errors.hpp"

namespace sbm {

namespace {

void check_edge_set(const Graph& graph, std::span<const EdgeId> edges) {
  std::vector<char> seen(graph.num_edges(), 0);
  for (EdgeId e : edges) {
    if (e >= graph.num_edges()) {
      throw DomainError("edge id " + std::to_string(e) + " out of range");
    }
    if (seen[e]) throw DomainError("edge id " + std::to_string(e) + " repeated");
    seen[e] = 1;
  }
}

}  // namespace

VertexLoads VertexLoads::from_edges(const Graph& graph, std::span<const EdgeId> edges) {
  VertexLoads loads(graph.num_vertices());
  for (EdgeId e : edges) {
    if (e >= graph.num_edges()) {
      throw DomainError("edge id " + std::to_string(e) + " out of range");
    }
    loads.add(graph, e);
  }
  return loads;
}

double Objective::gain(const Graph& graph, EdgeId e, const MatchView& view) const {
  std::vector<EdgeId> grown(view.edges.begin(), view.edges.end());
  const double before = evaluate(graph, grown);
  grown.push_back(e);
  return evaluate(graph, grown) - before;
}

ConcavePolynomial::ConcavePolynomial(double alpha) : alpha_(alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw DomainError("concave polynomial exponent must lie in [0,1]");
  }
  kind_ = alpha == 1.0 ? Kind::kLinear : alpha == 0.5 ? Kind::kSqrt : Kind::kGeneral;
}

std::string ConcavePolynomial::name() const {
  std::ostringstream s;
  s << "concave_polynomial(alpha=" << alpha_ << ")";
  return s.str();
}

double ConcavePolynomial::term(double x) const {
  if (x <= 0.0) return 0.0;
  switch (kind_) {
    case Kind::kLinear:
      return x;
    case Kind::kSqrt:
      return std::sqrt(x);
    case Kind::kGeneral:
      break;
  }
  return std::pow(x, alpha_);
}

double ConcavePolynomial::pair_gain(double w, double load_u, double load_v) const {
  // Exact in the modular case; (S+w)-S can round away from w.
  if (kind_ == Kind::kLinear) return 2.0 * w;
  return term(load_u + w) - term(load_u) + term(load_v + w) - term(load_v);
}

double ConcavePolynomial::evaluate(const Graph& graph, std::span<const EdgeId> edges) const {
  check_edge_set(graph, edges);
  const auto loads = VertexLoads::from_edges(graph, edges);
  double total = 0.0;
  for (double s : loads.values()) total += term(s);
  return total;
}

double concave_gain(double w, double load_u, double load_v, double alpha) {
  return ConcavePolynomial(alpha).pair_gain(w, load_u, load_v);
}

double evaluate_matching(std::span<const EdgeId> edges, const Graph& graph,
                         const Objective& objective) {
  check_edge_set(graph, edges);
  return objective.evaluate(graph, edges);
}

SubmodularityReport check_submodularity(const Objective& objective, const Graph& graph,
                                        std::size_t trials, std::uint64_t seed) {
  SubmodularityReport report;
  const std::size_t m = graph.num_edges();
  if (m == 0) return report;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<EdgeId> pick(0, static_cast<EdgeId>(m - 1));
  std::bernoulli_distribution coin(0.5);

  for (std::size_t t = 0; t < trials; ++t) {
    const EdgeId e = pick(rng);
    std::vector<EdgeId> larger, smaller;
    for (EdgeId f = 0; f < m; ++f) {
      if (f == e || !coin(rng)) continue;
      larger.push_back(f);
      if (coin(rng)) smaller.push_back(f);
    }
    auto marginal = [&](std::vector<EdgeId> base) {
      const double before = objective.evaluate(graph, base);
      base.push_back(e);
      return objective.evaluate(graph, base) - before;
    };
    const double gain_smaller = marginal(smaller);
    const double gain_larger = marginal(larger);
    ++report.comparisons;
    report.max_gap = std::max(report.max_gap, std::abs(gain_smaller - gain_larger));
    if (gain_smaller < gain_larger - 1e-9 || gain_larger < -1e-9) {
      report.passed = false;
      report.counterexample =
          SubmodularityCounterexample{smaller, larger, e, gain_smaller, gain_larger};
      return report;
    }
  }
  return report;
}

}  // namespace sbm
