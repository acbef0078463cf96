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

#ifndef MATCHCF_PATH_TREE_HPP
#define MATCHCF_PATH_TREE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "matchcf/graph.hpp"

namespace matchcf {

inline constexpr std::size_t kDefaultNodeCap = 1'000'000;

struct TreeNode {
  int label;            // vertex of the original graph this node stands for
  int parent;           // node id, -1 at the root
  Rational edge_weight; // weight of the edge to the parent, 0 at the root
  std::vector<int> children;
};

// Rooted tree whose nodes are the simple paths of a graph starting at a fixed
// root vertex; each node's label is the last vertex of its path. Node 0 is
// the root (the single-vertex path).
class RootedTree {
 public:
  int node_count() const { return static_cast<int>(nodes_.size()); }
  const TreeNode& node(int id) const { return nodes_[id]; }
  int root() const { return 0; }

  // The node's path through the original graph, e.g. "0-2-1".
  std::string path_string(int id) const;

  // Labels of all nodes, indexed by node id.
  std::vector<int> labels() const;

  // Undirected DOT rendering: node names are path strings, node labels are
  // the original vertex indices, edge labels are weights in lowest terms.
  std::string to_dot() const;

 private:
  friend RootedTree path_tree(const WeightedGraph&, int, std::size_t);
  std::vector<TreeNode> nodes_;
};

// Builds the tree of simple paths of g starting at root. Children of a node
// extend its path by one adjacent unused vertex, ordered by increasing vertex
// index; nodes are numbered depth-first. Throws when the tree would exceed
// node_cap nodes (path trees grow factorially).
RootedTree path_tree(const WeightedGraph& g, int root,
                     std::size_t node_cap = kDefaultNodeCap);

// A path tree re-expressed as a weighted graph on its node ids, plus the map
// from node id back to the original vertex. Evaluating the graph's matching
// polynomial with x_{labels[v]} substituted for x_v ties shared labels to a
// single variable.
struct TreeGraph {
  WeightedGraph graph;
  std::vector<int> labels;
};

TreeGraph tree_as_graph(const RootedTree& t);

}  // namespace matchcf

#endif  // MATCHCF_PATH_TREE_HPP
