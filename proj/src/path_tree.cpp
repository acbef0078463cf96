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

#include "matchcf/path_tree.hpp"

#include "matchcf/errors.hpp"

namespace matchcf {

std::string RootedTree::path_string(int id) const {
  std::vector<int> rev;
  for (int cur = id; cur != -1; cur = nodes_[cur].parent) rev.push_back(nodes_[cur].label);
  std::string out;
  for (auto it = rev.rbegin(); it != rev.rend(); ++it) {
    if (!out.empty()) out += '-';
    out += std::to_string(*it);
  }
  return out;
}

std::vector<int> RootedTree::labels() const {
  std::vector<int> out;
  out.reserve(nodes_.size());
  for (const TreeNode& n : nodes_) out.push_back(n.label);
  return out;
}

std::string RootedTree::to_dot() const {
  std::string out = "graph pathtree {\n";
  for (int id = 0; id < node_count(); ++id) {
    out += "  \"" + path_string(id) + "\" [label=\"" + std::to_string(nodes_[id].label) +
           "\"];\n";
  }
  for (int id = 1; id < node_count(); ++id) {
    out += "  \"" + path_string(nodes_[id].parent) + "\" -- \"" + path_string(id) +
           "\" [label=\"" + fraction_string(nodes_[id].edge_weight) + "\"];\n";
  }
  out += "}\n";
  return out;
}

namespace {

void grow(const WeightedGraph& g, int node, VertexSet used, std::size_t node_cap,
          std::vector<TreeNode>& nodes) {
  const int end = nodes[node].label;
  g.for_each_neighbor(end, [&](int k) {
    if (used.contains(k)) return;
    if (nodes.size() >= node_cap) {
      throw Error(ErrorCode::node_cap_exceeded,
                  "path tree exceeds " + std::to_string(node_cap) + " nodes");
    }
    const int child = static_cast<int>(nodes.size());
    nodes.push_back(TreeNode{k, node, g.weight(end, k), {}});
    nodes[node].children.push_back(child);
    grow(g, child, used.with(k), node_cap, nodes);
  });
}

}  // namespace

RootedTree path_tree(const WeightedGraph& g, int root, std::size_t node_cap) {
  if (root < 0 || root >= g.var_count() || !g.vertices().contains(root)) {
    throw Error(ErrorCode::index_out_of_range,
                "root " + std::to_string(root) + " is not a vertex");
  }
  if (node_cap < 1) {
    throw Error(ErrorCode::invalid_argument, "node cap must be at least 1");
  }
  RootedTree t;
  t.nodes_.push_back(TreeNode{root, -1, Rational(0), {}});
  grow(g, 0, VertexSet::single(root), node_cap, t.nodes_);
  return t;
}

TreeGraph tree_as_graph(const RootedTree& t) {
  const int m = t.node_count();
  if (m > kMaxVertices) {
    throw Error(ErrorCode::too_many_vertices,
                "path tree has " + std::to_string(m) + " nodes, graphs allow " +
                    std::to_string(kMaxVertices));
  }
  std::vector<Edge> edges;
  edges.reserve(m > 0 ? m - 1 : 0);
  for (int id = 1; id < m; ++id) {
    edges.push_back(Edge{t.node(id).parent, id, t.node(id).edge_weight});
  }
  return TreeGraph{WeightedGraph::create(m, edges), t.labels()};
}

}  // namespace matchcf
