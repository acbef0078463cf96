// Copyright 2026 The matchcf Authors
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

#include "matchcf/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <utility>

#include "matchcf/errors.hpp"

namespace matchcf {

WeightedGraph WeightedGraph::create(int n, const std::vector<Edge>& edges) {
  if (n < 1 || n > kMaxVertices) {
    throw Error(ErrorCode::too_many_vertices,
                "vertex count must be between 1 and 64, got " + std::to_string(n));
  }
  std::vector<Rational> w(static_cast<std::size_t>(n) * n, Rational(0));
  std::vector<std::pair<int, int>> seen;
  seen.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw Error(ErrorCode::index_out_of_range,
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                      ") out of range for n=" + std::to_string(n));
    }
    if (e.u == e.v) {
      throw Error(ErrorCode::self_loop, "self-loop at vertex " + std::to_string(e.u));
    }
    if (e.weight < 0) {
      throw Error(ErrorCode::negative_weight,
                  "negative weight on edge (" + std::to_string(e.u) + "," +
                      std::to_string(e.v) + ")");
    }
    const std::pair<int, int> key{std::min(e.u, e.v), std::max(e.u, e.v)};
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) {
      throw Error(ErrorCode::duplicate_edge,
                  "duplicate edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    }
    seen.push_back(key);
    // A zero weight means the edge is absent; it is validated but not stored.
    if (e.weight == 0) continue;
    Rational wc = e.weight;
    wc.canonicalize();
    w[static_cast<std::size_t>(e.u) * n + e.v] = wc;
    w[static_cast<std::size_t>(e.v) * n + e.u] = std::move(wc);
  }
  return WeightedGraph(n, VertexSet::full(n), std::move(w));
}

WeightedGraph WeightedGraph::without(VertexSet s) const {
  if (!s.subset_of(alive_)) {
    throw Error(ErrorCode::invalid_mask, "deleted set is not a subset of the vertices");
  }
  WeightedGraph g = *this;
  s.for_each([&](int v) {
    for (int u = 0; u < n_; ++u) {
      g.w_[static_cast<std::size_t>(u) * n_ + v] = 0;
      g.w_[static_cast<std::size_t>(v) * n_ + u] = 0;
    }
  });
  g.alive_ = VertexSet{alive_.bits & ~s.bits};
  return g;
}

WeightedGraph WeightedGraph::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  int n = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok[0] == '#') continue;
    if (tok == "n") {
      if (n != -1) throw SyntaxError(line_no, "repeated 'n' line");
      if (!(ls >> n)) throw SyntaxError(line_no, "expected vertex count after 'n'");
    } else if (tok == "e") {
      if (n == -1) throw SyntaxError(line_no, "edge before 'n' line");
      int u, v;
      std::string wtok;
      if (!(ls >> u >> v >> wtok)) {
        throw SyntaxError(line_no, "expected 'e <u> <v> <weight>'");
      }
      Rational w;
      try {
        w = parse_rational(wtok);
      } catch (const Error&) {
        throw SyntaxError(line_no, "bad weight '" + wtok + "'");
      }
      edges.push_back(Edge{u, v, std::move(w)});
    } else {
      throw SyntaxError(line_no, "unknown directive '" + tok + "'");
    }
    std::string extra;
    if (ls >> extra && extra[0] != '#') {
      throw SyntaxError(line_no, "trailing tokens '" + extra + "'");
    }
  }
  if (n == -1) throw SyntaxError(line_no > 0 ? line_no : 1, "missing 'n' line");
  return create(n, edges);
}

std::string WeightedGraph::serialize() const {
  std::string out = "n " + std::to_string(n_) + "\n";
  for (int u = 0; u < n_; ++u) {
    if (!alive_.contains(u)) continue;
    for (int v = u + 1; v < n_; ++v) {
      if (!alive_.contains(v) || weight(u, v) == 0) continue;
      out += "e " + std::to_string(u) + " " + std::to_string(v) + " " +
             fraction_string(weight(u, v)) + "\n";
    }
  }
  return out;
}

int WeightedGraph::degree(int v) const {
  int d = 0;
  for_each_neighbor(v, [&](int) { ++d; });
  return d;
}

std::string graph_hash(const WeightedGraph& g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : g.serialize()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace matchcf
