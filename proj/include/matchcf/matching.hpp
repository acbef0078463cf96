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

#ifndef MATCHCF_MATCHING_HPP
#define MATCHCF_MATCHING_HPP

#include <utility>
#include <vector>

#include "matchcf/graph.hpp"
#include "matchcf/polynomial.hpp"

namespace matchcf {

// A set of pairwise vertex-disjoint positive-weight edges.
struct Matching {
  std::vector<std::pair<int, int>> edges;  // each (u, v) with u < v, sorted
  VertexSet covered;                       // union of the endpoints
};

// All matchings of g, the empty one first, in lexicographic order of their
// sorted edge lists. Guarded to graphs with at most 14 surviving vertices.
std::vector<Matching> enumerate_matchings(const WeightedGraph& g);

// The matching polynomial straight from its definition: for every matching M
// the term (prod of x_i over uncovered surviving vertices i) times (prod of
// edge weights in M). Independent oracle for matching_poly; same size guard
// as enumerate_matchings.
SparsePolynomial matching_poly_bruteforce(const WeightedGraph& g);

// The matching polynomial via the deletion recurrence
//   mu(G) = x_i * mu(G - i) + sum_j lambda_ij * mu(G - i - j)
// pivoting on the lowest surviving vertex, memoized on the surviving vertex
// set. mu of the empty graph is 1.
SparsePolynomial matching_poly(const WeightedGraph& g);

}  // namespace matchcf

#endif  // MATCHCF_MATCHING_HPP
