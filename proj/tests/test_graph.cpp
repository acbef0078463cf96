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

#include <doctest.h>

#include <functional>
#include <string>
#include <vector>

#include "matchcf/errors.hpp"
#include "matchcf/graph.hpp"

using matchcf::Edge;
using matchcf::Error;
using matchcf::ErrorCode;
using matchcf::Rational;
using matchcf::SyntaxError;
using matchcf::VertexSet;
using matchcf::WeightedGraph;

namespace {

WeightedGraph triangle() {
  return WeightedGraph::create(3, {{0, 1, Rational(1)}, {0, 2, Rational(1)}, {1, 2, Rational(1)}});
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::invalid_argument;
}

}  // namespace

TEST_CASE("VertexSet basics") {
  VertexSet s = VertexSet::of({0, 3, 5});
  CHECK(s.count() == 3);
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(1));
  CHECK(s.lowest() == 0);
  CHECK(s.without(0).lowest() == 3);
  CHECK(s.with(1).count() == 4);
  CHECK((s & VertexSet::of({3})) == VertexSet::single(3));
  CHECK(VertexSet::single(3).subset_of(s));
  std::vector<int> seen;
  s.for_each([&](int v) { seen.push_back(v); });
  CHECK(seen == std::vector<int>{0, 3, 5});
  CHECK(VertexSet::full(3).count() == 3);
  CHECK(VertexSet{}.empty());
}

TEST_CASE("create validates edges") {
  CHECK(code_of([] { WeightedGraph::create(2, {{0, 5, Rational(1)}}); }) ==
        ErrorCode::index_out_of_range);
  CHECK(code_of([] { WeightedGraph::create(2, {{1, 1, Rational(1)}}); }) == ErrorCode::self_loop);
  CHECK(code_of([] { WeightedGraph::create(2, {{0, 1, Rational(-1)}}); }) ==
        ErrorCode::negative_weight);
  CHECK(code_of([] {
          WeightedGraph::create(2, {{0, 1, Rational(1)}, {1, 0, Rational(2)}});
        }) == ErrorCode::duplicate_edge);
  CHECK(code_of([] { WeightedGraph::create(65, {}); }) == ErrorCode::too_many_vertices);
  // A duplicate is a duplicate even when one mention carries weight zero.
  CHECK(code_of([] {
          WeightedGraph::create(2, {{0, 1, Rational(0)}, {0, 1, Rational(1)}});
        }) == ErrorCode::duplicate_edge);
}

TEST_CASE("zero-weight edges are absent") {
  const WeightedGraph g = WeightedGraph::create(3, {{0, 1, Rational(0)}, {1, 2, Rational(2)}});
  CHECK_FALSE(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 2));
  CHECK(g.degree(1) == 1);
  CHECK(g.weight(0, 1) == 0);
  CHECK(g.serialize() == "n 3\ne 1 2 2/1\n");
}

TEST_CASE("weights are stored in lowest terms") {
  const WeightedGraph g = WeightedGraph::create(2, {{0, 1, Rational(6, 8)}});
  CHECK(g.weight(0, 1) == Rational(3, 4));
  CHECK(g.serialize() == "n 2\ne 0 1 3/4\n");
}

TEST_CASE("parse accepts the documented format") {
  const WeightedGraph g = WeightedGraph::parse(
      "# header comment\n"
      "n 4\n"
      "\n"
      "e 0 1 3/4\n"
      "e 1 2 0.5 # inline comment\n"
      "e 2 3 2\n");
  CHECK(g.vertex_count() == 4);
  CHECK(g.weight(0, 1) == Rational(3, 4));
  CHECK(g.weight(1, 2) == Rational(1, 2));
  CHECK(g.weight(2, 3) == Rational(2));
}

TEST_CASE("parse reports the offending line") {
  auto message_of = [](const std::string& text) {
    try {
      WeightedGraph::parse(text);
    } catch (const SyntaxError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message_of("n 2\ne 0 1\n") == "line 2: expected 'e <u> <v> <weight>'");
  CHECK(message_of("e 0 1 1\n").substr(0, 7) == "line 1:");
  CHECK(message_of("n 2\nn 3\n").substr(0, 7) == "line 2:");
  CHECK(message_of("n two\n").substr(0, 7) == "line 1:");
  CHECK(message_of("n 2\nz 0 1 1\n").substr(0, 7) == "line 2:");
  CHECK(message_of("n 2\ne 0 1 1 junk\n").substr(0, 7) == "line 2:");
  CHECK(message_of("n 2\ne 0 1 oops\n") == "line 2: bad weight 'oops'");
  CHECK(message_of("") == "line 1: missing 'n' line");
}

TEST_CASE("parse round-trips serialize") {
  const WeightedGraph g = WeightedGraph::create(
      5, {{4, 0, Rational(1, 3)}, {2, 1, Rational(7)}, {0, 1, Rational(2, 5)}});
  const WeightedGraph back = WeightedGraph::parse(g.serialize());
  CHECK(back == g);
  CHECK(back.serialize() == g.serialize());
  // Lexicographic edge order with u < v.
  CHECK(g.serialize() == "n 5\ne 0 1 2/5\ne 0 4 1/3\ne 1 2 7/1\n");
}

TEST_CASE("without removes vertices and their edges") {
  const WeightedGraph g = triangle();
  const WeightedGraph h = g.without(VertexSet::single(0));
  CHECK(h.vertex_count() == 2);
  CHECK(h.var_count() == 3);
  CHECK_FALSE(h.vertices().contains(0));
  CHECK(h.weight(0, 1) == 0);
  CHECK(h.weight(1, 2) == 1);
  CHECK(h.serialize() == "n 3\ne 1 2 1/1\n");
  // Deleting everything leaves the empty graph.
  CHECK(g.without(g.vertices()).is_empty());
  CHECK(code_of([&] { g.without(VertexSet::of({3})); }) == ErrorCode::invalid_mask);
}

TEST_CASE("neighbors are visited in ascending order") {
  const WeightedGraph g = WeightedGraph::create(
      4, {{2, 0, Rational(1)}, {2, 3, Rational(2)}, {2, 1, Rational(3)}});
  std::vector<int> order;
  g.for_each_neighbor(2, [&](int u) { order.push_back(u); });
  CHECK(order == std::vector<int>{0, 1, 3});
}

TEST_CASE("graph_hash tracks content") {
  const WeightedGraph g = triangle();
  CHECK(matchcf::graph_hash(g) == matchcf::graph_hash(triangle()));
  CHECK(matchcf::graph_hash(g) != matchcf::graph_hash(g.without(VertexSet::single(1))));
  CHECK(matchcf::graph_hash(g).size() == 16);
}
