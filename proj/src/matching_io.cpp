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

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "sbm/errors.hpp"
#include "sbm/matching.hpp"

namespace sbm {

void write_matching_tsv(std::ostream& out, const Graph& graph, std::span<const EdgeId> edges) {
  out << "# u\tv\tedge_id\n";
  for (EdgeId e : edges) {
    const auto [u, v] = graph.endpoints(e);
    out << u << '\t' << v << '\t' << e << '\n';
  }
}

std::vector<EdgeId> read_matching_tsv(std::istream& in, const Graph& graph) {
  std::vector<EdgeId> edges;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    long long u = 0, v = 0, e = 0;
    if (!(ls >> u >> v >> e)) {
      throw ParseError("matching line " + std::to_string(lineno) + ": expected 'u v edge_id'");
    }
    if (e < 0 || static_cast<std::size_t>(e) >= graph.num_edges()) {
      throw DomainError("matching line " + std::to_string(lineno) + ": unknown edge id " +
                        std::to_string(e));
    }
    const auto ends = graph.endpoints(static_cast<EdgeId>(e));
    const bool same = (ends.u == u && ends.v == v) || (ends.u == v && ends.v == u);
    if (!same) {
      throw DomainError("matching line " + std::to_string(lineno) + ": edge " +
                        std::to_string(e) + " does not join " + std::to_string(u) + " and " +
                        std::to_string(v));
    }
    edges.push_back(static_cast<EdgeId>(e));
  }
  return edges;
}

}  // namespace sbm
