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

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "sbm/errors.hpp"
#include "sbm/graph.hpp"

namespace sbm {
namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

enum class Field { kReal, kInteger, kPattern };

Field parse_banner(const std::string& line) {
  std::istringstream in(line);
  std::string tag, object, format, field, symmetry;
  in >> tag >> object >> format >> field >> symmetry;
  if (tag != "%%MatrixMarket" || lower(object) != "matrix" || lower(format) != "coordinate") {
    throw ParseError("expected '%%MatrixMarket matrix coordinate ...' banner");
  }
  field = lower(field);
  symmetry = lower(symmetry);
  if (symmetry != "symmetric" && symmetry != "general") {
    throw ParseError("unsupported symmetry '" + symmetry + "'");
  }
  if (field == "real" || field == "double") return Field::kReal;
  if (field == "integer") return Field::kInteger;
  if (field == "pattern") return Field::kPattern;
  throw ParseError("unsupported field '" + field + "'");
}

bool is_comment_or_blank(const std::string& line) {
  auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '%';
}

// Whitespace-separated numeric fields parsed with from_chars.
class Tokens {
 public:
  explicit Tokens(std::string_view text) : rest_(text) {}

  template <typename T>
  bool next(T& value) {
    auto first = rest_.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return false;
    rest_.remove_prefix(first);
    auto [ptr, ec] = std::from_chars(rest_.data(), rest_.data() + rest_.size(), value);
    if (ec != std::errc()) return false;
    rest_.remove_prefix(static_cast<std::size_t>(ptr - rest_.data()));
    return rest_.empty() || rest_.front() == ' ' || rest_.front() == '\t' ||
           rest_.front() == '\r';
  }

 private:
  std::string_view rest_;
};

}  // namespace

Graph parse_matrix_market(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty Matrix Market stream");
  const Field field = parse_banner(line);

  bool have_size = false;
  while (std::getline(in, line)) {
    if (!is_comment_or_blank(line)) {
      have_size = true;
      break;
    }
  }
  if (!have_size) throw ParseError("missing size line");
  long long rows = 0, cols = 0, nnz = 0;
  {
    Tokens t(line);
    if (!t.next(rows) || !t.next(cols) || !t.next(nnz) || rows < 0 || cols < 0 || nnz < 0) {
      throw ParseError("malformed size line: '" + line + "'");
    }
  }
  if (rows != cols) throw ParseError("matrix must be square to describe a graph");

  std::vector<WeightedEdge> edges;
  edges.reserve(static_cast<std::size_t>(nnz));
  long long seen = 0;
  while (seen < nnz && std::getline(in, line)) {
    if (is_comment_or_blank(line)) continue;
    Tokens el(line);
    long long i = 0, j = 0;
    double w = 1.0;
    if (!el.next(i) || !el.next(j)) throw ParseError("malformed entry: '" + line + "'");
    if (field != Field::kPattern && !el.next(w)) {
      throw ParseError("entry without value: '" + line + "'");
    }
    if (i < 1 || j < 1 || i > rows || j > cols) {
      throw ParseError("entry (" + std::to_string(i) + "," + std::to_string(j) +
                       ") outside declared " + std::to_string(rows) + "x" +
                       std::to_string(cols) + " bounds");
    }
    if (w < 0.0) throw DomainError("negative weight in entry: '" + line + "'");
    edges.push_back({static_cast<VertexId>(i - 1), static_cast<VertexId>(j - 1), w});
    ++seen;
  }
  if (seen < nnz) {
    throw ParseError("expected " + std::to_string(nnz) + " entries, found " +
                     std::to_string(seen));
  }
  return Graph::from_edges(static_cast<std::size_t>(rows), edges);
}

Graph parse_matrix_market_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_matrix_market(in);
}

void write_matrix_market(std::ostream& out, const Graph& graph,
                         std::span<const std::string> comments) {
  out << "%%MatrixMarket matrix coordinate real symmetric\n";
  for (const auto& c : comments) out << '%' << c << '\n';
  out << graph.num_vertices() << ' ' << graph.num_vertices() << ' ' << graph.num_edges()
      << '\n';
  char buf[64];
  for (EdgeId e = 0; e < graph.num_edges(); ++e) {
    const auto [u, v] = graph.endpoints(e);
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), graph.weight(e));
    out << v + 1 << ' ' << u + 1 << ' ' << std::string_view(buf, ptr) << '\n';
  }
}

}  // namespace sbm
