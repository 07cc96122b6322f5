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

#include <cmath>
#include <random>
#include <vector>

#include "sbm/errors.hpp"
#include "sbm/graph.hpp"

namespace sbm {
namespace {

// splitmix64 finalizer; gives each (seed, edge id) pair an independent stream.
std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

RmatParams RmatParams::g500(int scale, int edge_factor, std::uint64_t seed) {
  return {0.57, 0.19, 0.19, 0.05, scale, edge_factor, seed};
}

RmatParams RmatParams::ssca(int scale, int edge_factor, std::uint64_t seed) {
  constexpr double q = 0.4 / 3.0;
  return {0.6, q, q, q, scale, edge_factor, seed};
}

Graph generate_rmat(const RmatParams& p) {
  for (double x : {p.a, p.b, p.c, p.d}) {
    if (!(x >= 0.0 && x <= 1.0)) throw DomainError("RMAT probabilities must lie in [0,1]");
  }
  if (std::abs(p.a + p.b + p.c + p.d - 1.0) > 1e-9) {
    throw DomainError("RMAT probabilities must sum to 1");
  }
  if (p.scale < 1 || p.scale > 31) throw DomainError("RMAT scale must be in [1,31]");
  if (p.edge_factor < 1) throw DomainError("RMAT edge factor must be >= 1");

  const std::size_t n = std::size_t{1} << p.scale;
  const std::size_t samples = n * static_cast<std::size_t>(p.edge_factor);
  const double ab = p.a + p.b;
  const double abc = ab + p.c;

  std::mt19937_64 rng(p.seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<WeightedEdge> edges;
  edges.reserve(samples);
  for (std::size_t s = 0; s < samples; ++s) {
    VertexId row = 0, col = 0;
    for (int level = 0; level < p.scale; ++level) {
      const double r = coin(rng);
      const VertexId bit = VertexId{1} << (p.scale - 1 - level);
      if (r < p.a) {
      } else if (r < ab) {
        col |= bit;
      } else if (r < abc) {
        row |= bit;
      } else {
        row |= bit;
        col |= bit;
      }
    }
    edges.push_back({row, col, 1.0});
  }
  return Graph::from_edges(n, edges);
}

Graph assign_random_weights(const Graph& graph, double lo, double hi, std::uint64_t seed,
                            WeightMode mode) {
  if (!(lo <= hi)) throw DomainError("weight range requires lo <= hi");
  if (lo < 0.0) throw DomainError("weights must be non-negative");
  std::vector<double> w(graph.num_edges());
  const std::uint64_t base = mix64(seed);
  if (mode == WeightMode::kReal) {
    const double span = hi - lo;
    for (EdgeId e = 0; e < w.size(); ++e) {
      const double unit = static_cast<double>(mix64(base ^ e) >> 11) * 0x1.0p-53;
      w[e] = lo == hi ? lo : std::min(lo + span * unit, std::nextafter(hi, lo));
    }
  } else {
    const double first = std::ceil(lo);
    const double last = std::floor(hi);
    if (first > last) throw DomainError("integer weight range contains no integer");
    const auto count = static_cast<std::uint64_t>(last - first) + 1;
    for (EdgeId e = 0; e < w.size(); ++e) {
      // Multiply-shift range reduction on the high 32 bits.
      const std::uint64_t r = ((mix64(base ^ e) >> 32) * count) >> 32;
      w[e] = first + static_cast<double>(r);
    }
  }
  return graph.with_weights(std::move(w));
}

}  // namespace sbm
