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

#ifndef MATCHCF_GRAPH_HPP
#define MATCHCF_GRAPH_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "matchcf/rational.hpp"

namespace matchcf {

inline constexpr int kMaxVertices = 64;

// Subset of the vertex indices 0..63 as one machine word.
struct VertexSet {
  std::uint64_t bits = 0;

  static VertexSet full(int n) {
    return {n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1)};
  }
  static VertexSet single(int v) { return {std::uint64_t{1} << v}; }
  static VertexSet of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s.bits |= std::uint64_t{1} << v;
    return s;
  }

  bool contains(int v) const { return (bits >> v) & 1; }
  bool empty() const { return bits == 0; }
  int count() const { return __builtin_popcountll(bits); }
  int lowest() const { return __builtin_ctzll(bits); }
  bool subset_of(VertexSet other) const { return (bits & ~other.bits) == 0; }

  VertexSet with(int v) const { return {bits | (std::uint64_t{1} << v)}; }
  VertexSet without(int v) const { return {bits & ~(std::uint64_t{1} << v)}; }

  friend VertexSet operator|(VertexSet a, VertexSet b) { return {a.bits | b.bits}; }
  friend VertexSet operator&(VertexSet a, VertexSet b) { return {a.bits & b.bits}; }
  friend bool operator==(VertexSet a, VertexSet b) { return a.bits == b.bits; }

  // Calls fn(v) for each member in increasing order.
  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::uint64_t m = bits; m; m &= m - 1) {
      fn(__builtin_ctzll(m));
    }
  }
};

struct Edge {
  int u;
  int v;
  Rational weight;
};

// Immutable weighted graph on vertex set [n] with symmetric non-negative
// rational edge weights and zero diagonal. A zero weight means the edge is
// absent. Vertex deletion keeps the original indices alive in a mask, so the
// matching polynomial of an induced subgraph stays a polynomial in the
// original vertex variables.
class WeightedGraph {
 public:
  static WeightedGraph create(int n, const std::vector<Edge>& edges);

  // Induced subgraph on vertices() \ s. Deleting every vertex yields the
  // empty graph (whose matching polynomial is 1).
  WeightedGraph without(VertexSet s) const;

  static WeightedGraph parse(std::string_view text);
  std::string serialize() const;

  // Number of variables x_0..x_{n-1}; fixed at construction.
  int var_count() const { return n_; }
  // Surviving vertices.
  VertexSet vertices() const { return alive_; }
  int vertex_count() const { return alive_.count(); }
  bool is_empty() const { return alive_.empty(); }

  const Rational& weight(int u, int v) const { return w_[u * n_ + v]; }
  bool has_edge(int u, int v) const {
    return alive_.contains(u) && alive_.contains(v) && weight(u, v) != 0;
  }
  int degree(int v) const;

  // Positive-weight neighbors of u among surviving vertices, increasing.
  template <class Fn>
  void for_each_neighbor(int u, Fn&& fn) const {
    alive_.for_each([&](int v) {
      if (v != u && weight(u, v) != 0) fn(v);
    });
  }

  bool operator==(const WeightedGraph& other) const {
    return n_ == other.n_ && alive_ == other.alive_ && w_ == other.w_;
  }

 private:
  WeightedGraph(int n, VertexSet alive, std::vector<Rational> w)
      : n_(n), alive_(alive), w_(std::move(w)) {}

  int n_ = 0;
  VertexSet alive_;
  std::vector<Rational> w_;  // dense n*n, symmetric, zero diagonal
};

// FNV-1a over the canonical serialization, as a fixed-width hex string.
std::string graph_hash(const WeightedGraph& g);

}  // namespace matchcf

#endif  // MATCHCF_GRAPH_HPP
