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

#include "matchcf/matching.hpp"

#include <unordered_map>

#include "matchcf/errors.hpp"

namespace matchcf {

namespace {

constexpr int kBruteForceLimit = 14;

void check_brute_force_size(const WeightedGraph& g) {
  if (g.vertex_count() > kBruteForceLimit) {
    throw Error(ErrorCode::too_large_for_brute_force,
                "brute force limited to " + std::to_string(kBruteForceLimit) +
                    " vertices, got " + std::to_string(g.vertex_count()));
  }
}

std::vector<std::pair<int, int>> edge_list(const WeightedGraph& g) {
  std::vector<std::pair<int, int>> edges;
  g.vertices().for_each([&](int u) {
    g.vertices().for_each([&](int v) {
      if (u < v && g.weight(u, v) != 0) edges.emplace_back(u, v);
    });
  });
  return edges;
}

void extend(const std::vector<std::pair<int, int>>& edges, std::size_t from,
            Matching& current, std::vector<Matching>& out) {
  out.push_back(current);
  for (std::size_t k = from; k < edges.size(); ++k) {
    auto [u, v] = edges[k];
    if (current.covered.contains(u) || current.covered.contains(v)) continue;
    current.edges.emplace_back(u, v);
    current.covered = current.covered.with(u).with(v);
    extend(edges, k + 1, current, out);
    current.edges.pop_back();
    current.covered = current.covered.without(u).without(v);
  }
}

}  // namespace

std::vector<Matching> enumerate_matchings(const WeightedGraph& g) {
  check_brute_force_size(g);
  std::vector<std::pair<int, int>> edges = edge_list(g);
  std::vector<Matching> out;
  Matching current;
  extend(edges, 0, current, out);
  return out;
}

SparsePolynomial matching_poly_bruteforce(const WeightedGraph& g) {
  SparsePolynomial poly(g.var_count());
  for (const Matching& m : enumerate_matchings(g)) {
    Rational coeff(1);
    for (auto [u, v] : m.edges) coeff *= g.weight(u, v);
    Monomial mono(g.var_count(), 0);
    g.vertices().for_each([&](int i) {
      if (!m.covered.contains(i)) mono[i] = 1;
    });
    poly.add_term(mono, coeff);
  }
  return poly;
}

namespace {

SparsePolynomial mu_rec(const WeightedGraph& g, VertexSet alive,
                        std::unordered_map<std::uint64_t, SparsePolynomial>& memo) {
  if (alive.empty()) return SparsePolynomial::constant(g.var_count(), Rational(1));
  if (auto it = memo.find(alive.bits); it != memo.end()) return it->second;

  const int i = alive.lowest();
  const VertexSet rest = alive.without(i);
  SparsePolynomial result = SparsePolynomial::variable(g.var_count(), i) * mu_rec(g, rest, memo);
  rest.for_each([&](int j) {
    const Rational& w = g.weight(i, j);
    if (w != 0) result += mu_rec(g, rest.without(j), memo) * w;
  });
  memo.emplace(alive.bits, result);
  return result;
}

}  // namespace

SparsePolynomial matching_poly(const WeightedGraph& g) {
  std::unordered_map<std::uint64_t, SparsePolynomial> memo;
  return mu_rec(g, g.vertices(), memo);
}

}  // namespace matchcf
