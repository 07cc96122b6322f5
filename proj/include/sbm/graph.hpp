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

#ifndef SBM_GRAPH_HPP_
#define SBM_GRAPH_HPP_

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace sbm {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

struct WeightedEdge {
  VertexId u;
  VertexId v;
  double weight;
};

struct Endpoints {
  VertexId u;  // always u < v
  VertexId v;

  friend bool operator==(const Endpoints&, const Endpoints&) = default;
};

struct Incidence {
  VertexId neighbor;
  EdgeId edge;

  friend bool operator==(const Incidence&, const Incidence&) = default;
};

// Simple undirected edge-weighted graph in compressed adjacency form.
//
// Edge ids are assigned in lexicographic (u, v) order of the canonical
// endpoints, so two graphs built from the same edge set compare equal
// regardless of input order. Adjacency lists are sorted by neighbor id.
class Graph {
 public:
  Graph() = default;

  // Self loops are dropped; of several entries for the same unordered pair the
  // first one wins. Throws DomainError on negative or non-finite weights and on
  // endpoints >= num_vertices.
  static Graph from_edges(std::size_t num_vertices,
                          std::span<const WeightedEdge> edges);

  std::size_t num_vertices() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_edges() const { return endpoints_.size(); }
  std::size_t max_degree() const { return max_degree_; }

  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  std::span<const Incidence> incident(VertexId v) const {
    return {adjacency_.data() + offsets_[v], degree(v)};
  }

  const Endpoints& endpoints(EdgeId e) const { return endpoints_[e]; }
  double weight(EdgeId e) const { return weights_[e]; }
  std::span<const double> weights() const { return weights_; }
  std::span<const Endpoints> edges() const { return endpoints_; }

  VertexId other(EdgeId e, VertexId v) const {
    const auto& [a, b] = endpoints_[e];
    return a == v ? b : a;
  }

  // Edge id joining u and v, or kNoEdge. O(log degree).
  EdgeId find_edge(VertexId u, VertexId v) const;

  // Same topology with a replacement weight vector (one entry per edge id).
  Graph with_weights(std::vector<double> weights) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Incidence> adjacency_;
  std::vector<Endpoints> endpoints_;
  std::vector<double> weights_;
  std::size_t max_degree_ = 0;
};

// Per-vertex degree capacities b(v), clamped to the vertex degree.
class BVector {
 public:
  BVector() = default;

  int operator[](VertexId v) const { return values_[v]; }
  std::span<const int> values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  int beta() const { return beta_; }
  std::int64_t total() const { return total_; }

  friend BVector make_b_vector(const Graph& graph, std::int64_t uniform);
  friend BVector make_b_vector(const Graph& graph,
                               std::span<const std::int64_t> per_vertex);

 private:
  std::vector<int> values_;
  int beta_ = 0;
  std::int64_t total_ = 0;
};

// Uniform capacity for every vertex. Throws DomainError if uniform < 0.
BVector make_b_vector(const Graph& graph, std::int64_t uniform);
// Per-vertex capacities. Throws DomainError on a negative entry or when the
// list length differs from the vertex count.
BVector make_b_vector(const Graph& graph, std::span<const std::int64_t> per_vertex);

// One integer per line; line i holds b of vertex i. Blank lines and lines
// starting with '#' or '%' are skipped.
std::vector<std::int64_t> read_b_list(std::istream& in);

// ---------------------------------------------------------------------------
// Matrix Market I/O

// Reads a square coordinate matrix (real, integer or pattern; symmetric or
// general) as an undirected graph. Indices are 1-based in the file.
Graph parse_matrix_market(std::istream& in);
Graph parse_matrix_market_file(const std::string& path);

// Writes the lower triangle as `real symmetric` with round-trippable weights.
// Each comment line is emitted after the banner with a leading '%'.
void write_matrix_market(std::ostream& out, const Graph& graph,
                         std::span<const std::string> comments = {});

// ---------------------------------------------------------------------------
// Synthetic generation and weights

struct RmatParams {
  double a = 0.57;
  double b = 0.19;
  double c = 0.19;
  double d = 0.05;
  int scale = 10;
  int edge_factor = 16;
  std::uint64_t seed = 1;

  static RmatParams g500(int scale, int edge_factor, std::uint64_t seed);
  static RmatParams ssca(int scale, int edge_factor, std::uint64_t seed);
};

// 2^scale vertices, edge_factor * 2^scale sampled directed pairs, symmetrized;
// self loops and duplicates are dropped without resampling. All weights 1.
Graph generate_rmat(const RmatParams& params);

enum class WeightMode { kReal, kInteger };

// Real mode draws from [lo, hi); integer mode from the integers in [lo, hi].
// Each weight is a pure function of (seed, edge id).
Graph assign_random_weights(const Graph& graph, double lo, double hi,
                            std::uint64_t seed, WeightMode mode = WeightMode::kReal);

}  // namespace sbm

#endif  // SBM_GRAPH_HPP_
