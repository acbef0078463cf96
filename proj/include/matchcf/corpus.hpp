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

#ifndef MATCHCF_CORPUS_HPP
#define MATCHCF_CORPUS_HPP

#include <cstdint>

#include "matchcf/graph.hpp"
#include "matchcf/rng.hpp"

namespace matchcf {

// Vertex pairs (u, v), u < v, in lexicographic order; bit k of an edge mask
// refers to the k-th pair. Everything that enumerates unit-weight graphs by
// mask uses this one ordering.
template <class Fn>
void for_each_vertex_pair(int n, Fn&& fn) {
  int index = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) fn(index++, u, v);
  }
}

inline int pair_count(int n) { return n * (n - 1) / 2; }

// The unit-weight graph on n vertices whose edge set is the given mask.
WeightedGraph unit_graph_from_mask(int n, std::uint64_t mask);

// Connectivity of the mask graph, without building a WeightedGraph.
bool edge_mask_connected(int n, std::uint64_t mask);

// A random graph: each pair is an edge with probability 1/2, weights are
// p/q with p, q uniform in 1..16. Drawn entirely from the given stream.
WeightedGraph random_weighted_graph(int n, SampleRng& rng);

// Small named graphs with unit weights.
WeightedGraph complete_graph(int n);
WeightedGraph path_graph(int n);
WeightedGraph cycle_graph(int n);
// Center 0 with n-1 leaves.
WeightedGraph star_graph(int n);

}  // namespace matchcf

#endif  // MATCHCF_CORPUS_HPP
