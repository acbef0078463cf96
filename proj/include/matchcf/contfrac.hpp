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

#ifndef MATCHCF_CONTFRAC_HPP
#define MATCHCF_CONTFRAC_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "matchcf/graph.hpp"
#include "matchcf/path_tree.hpp"
#include "matchcf/polynomial.hpp"
#include "matchcf/rational.hpp"

namespace matchcf {

// A continued-fraction value num/den held without dividing, so points where
// the denominator vanishes need no special casing. For a rooted object the
// pair is (mu, mu with the root removed).
struct CFPair {
  ComplexRational num;
  ComplexRational den;
};

// Bottom-up evaluation of the continued fraction a tree encodes. Leaves give
// the pair (x, 1); an internal node with child pairs (n_k, d_k) and edge
// weights w_k gives
//   num = x * prod_k n_k + sum_k w_k * d_k * prod_{k' != k} n_{k'}
//   den = prod_k n_k
// which keeps num = mu(tree) and den = mu(tree minus root) at the given
// point. Ops supplies the ring: leaf(label) -> V, weight(Rational) -> V,
// mul(V, V) -> V, add(V, V) -> V, and one() -> V.
template <class V, class Ops>
std::pair<V, V> tree_fold(const RootedTree& t, const Ops& ops) {
  const int m = t.node_count();
  std::vector<std::pair<V, V>> value(m, {ops.one(), ops.one()});
  // Children carry larger ids than their parent, so walking ids backwards is
  // a post-order pass.
  for (int id = m - 1; id >= 0; --id) {
    const TreeNode& node = t.node(id);
    V x = ops.leaf(node.label);
    if (node.children.empty()) {
      value[id] = {std::move(x), ops.one()};
      continue;
    }
    const std::size_t k = node.children.size();
    // prefix[i] = product of child numerators before i, suffix[i] = after i.
    std::vector<V> prefix(k, ops.one()), suffix(k, ops.one());
    for (std::size_t i = 1; i < k; ++i)
      prefix[i] = ops.mul(prefix[i - 1], value[node.children[i - 1]].first);
    for (std::size_t i = k - 1; i-- > 0;)
      suffix[i] = ops.mul(suffix[i + 1], value[node.children[i + 1]].first);
    V all = ops.mul(prefix[k - 1], value[node.children[k - 1]].first);
    V num = ops.mul(std::move(x), all);
    for (std::size_t i = 0; i < k; ++i) {
      const int c = node.children[i];
      V term = ops.mul(ops.weight(t.node(c).edge_weight), value[c].second);
      term = ops.mul(std::move(term), ops.mul(prefix[i], suffix[i]));
      num = ops.add(std::move(num), std::move(term));
    }
    value[id] = {std::move(num), std::move(all)};
  }
  return std::move(value[0]);
}

// Evaluates the tree continued fraction at x_{label} := assignment[label].
// The result is exactly (mu(T), mu(T minus root)) under that assignment.
CFPair tree_cf_eval(const RootedTree& t, const std::vector<ComplexRational>& assignment);

// The graph continued fraction (mu(G), mu(G minus i)) evaluated at a.
CFPair graph_cf_eval(const WeightedGraph& g, int i, const std::vector<ComplexRational>& a);

// Number of matchings of the tree (weights ignored, zero-weight tree edges
// cannot occur since path trees only follow positive-weight edges).
Integer count_matchings(const RootedTree& t);

enum class GodsilMethod {
  symbolic,         // exact polynomial identity in the shared graph variables
  points_rational,  // exact cross-multiplied equality at deterministic points
  points_modular,   // the same point check in two 62-bit prime fields
};

struct GodsilOptions {
  std::size_t node_cap = kDefaultNodeCap;
  // Symbolic expansion is used when the tree fits in a graph (64 nodes) and
  // has at most this many matchings; beyond that the expanded polynomials
  // get too large and the point check takes over.
  Integer symbolic_matching_cap = 150;
  // Point checks run over the rationals by default; the modular field check
  // is much faster on large trees and is used by the bulk sweeps.
  bool modular_points = false;
};

struct GodsilResult {
  bool ok = false;
  GodsilMethod method = GodsilMethod::symbolic;
  int tree_nodes = 0;

  explicit operator bool() const { return ok; }
};

// Checks mu(G) / mu(G minus i) = mu(T) / mu(T minus root) for T the path
// tree of G at i, in cross-multiplied form so vanishing denominators are
// harmless: mu(G) * mu_sub(T minus root) = mu(G minus i) * mu_sub(T), where
// mu_sub substitutes each tree variable by its label's graph variable.
// Small trees are verified by exact polynomial identity; larger ones by
// exact evaluation at 3n deterministic points (see GodsilOptions).
GodsilResult verify_godsil(const WeightedGraph& g, int i,
                           const GodsilOptions& options = {});

const char* godsil_method_name(GodsilMethod m);

}  // namespace matchcf

#endif  // MATCHCF_CONTFRAC_HPP
