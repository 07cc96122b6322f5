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

#include "sbm/graph.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <sstream>
#include <string>

#include "sbm/errors.hpp"

namespace sbm {

Graph Graph::from_edges(std::size_t num_vertices, std::span<const WeightedEdge> edges) {
  if (num_vertices > std::numeric_limits<VertexId>::max()) {
    throw DomainError("vertex count exceeds 32-bit vertex ids");
  }
  std::vector<WeightedEdge> canon;
  canon.reserve(edges.size());
  for (const auto& e : edges) {
    if (e.u >= num_vertices || e.v >= num_vertices) {
      throw DomainError("edge endpoint out of range");
    }
    if (!(e.weight >= 0.0) || !std::isfinite(e.weight)) {
      throw DomainError("edge weights must be finite and non-negative");
    }
    if (e.u == e.v) continue;
    canon.push_back({std::min(e.u, e.v), std::max(e.u, e.v), e.weight});
  }
  std::stable_sort(canon.begin(), canon.end(), [](const auto& x, const auto& y) {
    return x.u != y.u ? x.u < y.u : x.v < y.v;
  });
  canon.erase(std::unique(canon.begin(), canon.end(),
                          [](const auto& x, const auto& y) { return x.u == y.u && x.v == y.v; }),
              canon.end());
  if (canon.size() >= kNoEdge) throw DomainError("edge count exceeds 32-bit edge ids");

  Graph g;
  g.offsets_.assign(num_vertices + 1, 0);
  g.endpoints_.reserve(canon.size());
  g.weights_.reserve(canon.size());
  for (const auto& e : canon) {
    g.endpoints_.push_back({e.u, e.v});
    g.weights_.push_back(e.weight);
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  for (std::size_t v = 0; v < num_vertices; ++v) g.offsets_[v + 1] += g.offsets_[v];

  g.adjacency_.resize(2 * canon.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (EdgeId id = 0; id < g.endpoints_.size(); ++id) {
    const auto [u, v] = g.endpoints_[id];
    g.adjacency_[cursor[u]++] = {v, id};
    g.adjacency_[cursor[v]++] = {u, id};
  }
  for (std::size_t v = 0; v < num_vertices; ++v) {
    auto first = g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto last = g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    std::sort(first, last, [](const Incidence& x, const Incidence& y) {
      return x.neighbor < y.neighbor;
    });
    g.max_degree_ = std::max(g.max_degree_, g.offsets_[v + 1] - g.offsets_[v]);
  }
  return g;
}

EdgeId Graph::find_edge(VertexId u, VertexId v) const {
  if (u >= num_vertices() || v >= num_vertices()) return kNoEdge;
  auto adj = incident(u);
  auto it = std::lower_bound(adj.begin(), adj.end(), v, [](const Incidence& x, VertexId key) {
    return x.neighbor < key;
  });
  return it != adj.end() && it->neighbor == v ? it->edge : kNoEdge;
}

Graph Graph::with_weights(std::vector<double> weights) const {
  if (weights.size() != num_edges()) {
    throw DomainError("weight vector length differs from edge count");
  }
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw DomainError("edge weights must be finite and non-negative");
    }
  }
  Graph g = *this;
  g.weights_ = std::move(weights);
  return g;
}

namespace {

void finish_b_vector(std::vector<int>& values, int& beta, std::int64_t& total) {
  beta = 0;
  total = 0;
  for (int b : values) {
    beta = std::max(beta, b);
    total += b;
  }
}

}  // namespace

BVector make_b_vector(const Graph& graph, std::int64_t uniform) {
  if (uniform < 0) throw DomainError("b must be non-negative");
  BVector out;
  out.values_.resize(graph.num_vertices());
  for (VertexId v = 0; v < graph.num_vertices(); ++v) {
    out.values_[v] = static_cast<int>(
        std::min<std::int64_t>(uniform, static_cast<std::int64_t>(graph.degree(v))));
  }
  finish_b_vector(out.values_, out.beta_, out.total_);
  return out;
}

BVector make_b_vector(const Graph& graph, std::span<const std::int64_t> per_vertex) {
  if (per_vertex.size() != graph.num_vertices()) {
    throw DomainError("b list has " + std::to_string(per_vertex.size()) +
                      " entries, graph has " + std::to_string(graph.num_vertices()) +
                      " vertices");
  }
  BVector out;
  out.values_.resize(graph.num_vertices());
  for (VertexId v = 0; v < graph.num_vertices(); ++v) {
    if (per_vertex[v] < 0) throw DomainError("b must be non-negative");
    out.values_[v] = static_cast<int>(
        std::min<std::int64_t>(per_vertex[v], static_cast<std::int64_t>(graph.degree(v))));
  }
  finish_b_vector(out.values_, out.beta_, out.total_);
  return out;
}

std::vector<std::int64_t> read_b_list(std::istream& in) {
  std::vector<std::int64_t> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#' || line[first] == '%') continue;
    std::istringstream ls(line);
    std::int64_t value = 0;
    std::string rest;
    if (!(ls >> value) || (ls >> rest)) {
      throw ParseError("b file line " + std::to_string(lineno) + ": expected one integer");
    }
    out.push_back(value);
  }
  return out;
}

}  // namespace sbm
