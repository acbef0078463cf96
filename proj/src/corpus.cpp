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

#include "matchcf/corpus.hpp"

#include "matchcf/errors.hpp"

namespace matchcf {

WeightedGraph unit_graph_from_mask(int n, std::uint64_t mask) {
  std::vector<Edge> edges;
  for_each_vertex_pair(n, [&](int index, int u, int v) {
    if ((mask >> index) & 1) edges.push_back(Edge{u, v, Rational(1)});
  });
  return WeightedGraph::create(n, edges);
}

bool edge_mask_connected(int n, std::uint64_t mask) {
  std::uint32_t adj[kMaxVertices] = {};
  for_each_vertex_pair(n, [&](int index, int u, int v) {
    if ((mask >> index) & 1) {
      adj[u] |= std::uint32_t{1} << v;
      adj[v] |= std::uint32_t{1} << u;
    }
  });
  const std::uint32_t all = (n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1);
  std::uint32_t reach = 1;
  while (true) {
    std::uint32_t next = reach;
    for (std::uint32_t m = reach; m; m &= m - 1) next |= adj[__builtin_ctz(m)];
    if (next == reach) break;
    reach = next;
  }
  return reach == all;
}

WeightedGraph random_weighted_graph(int n, SampleRng& rng) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.next() & 1) {
        const std::uint64_t p = rng.below(16) + 1;
        const std::uint64_t q = rng.below(16) + 1;
        Rational w(p, q);
        w.canonicalize();
        edges.push_back(Edge{u, v, std::move(w)});
      }
    }
  }
  return WeightedGraph::create(n, edges);
}

WeightedGraph complete_graph(int n) {
  const int pairs = pair_count(n);
  const std::uint64_t mask = pairs == 0 ? 0 : ~std::uint64_t{0} >> (64 - pairs);
  return unit_graph_from_mask(n, mask);
}

WeightedGraph path_graph(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back(Edge{v, v + 1, Rational(1)});
  return WeightedGraph::create(n, edges);
}

WeightedGraph cycle_graph(int n) {
  if (n < 3) {
    throw Error(ErrorCode::invalid_argument, "a cycle needs at least 3 vertices");
  }
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back(Edge{v, v + 1, Rational(1)});
  edges.push_back(Edge{0, n - 1, Rational(1)});
  return WeightedGraph::create(n, edges);
}

WeightedGraph star_graph(int n) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.push_back(Edge{0, v, Rational(1)});
  return WeightedGraph::create(n, edges);
}

}  // namespace matchcf
