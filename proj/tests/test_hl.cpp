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

#include <cmath>
#include <string>
#include <vector>

#include "matchcf/corpus.hpp"
#include "matchcf/errors.hpp"
#include "matchcf/hl.hpp"
#include "matchcf/matching.hpp"
#include "matchcf/rng.hpp"

using matchcf::ComplexRational;
using matchcf::Error;
using matchcf::ErrorCode;
using matchcf::Rational;
using matchcf::Region;
using matchcf::Root;
using matchcf::SampleRng;
using matchcf::UnivariatePoly;
using matchcf::VerificationReport;
using matchcf::VertexSet;
using matchcf::WeightedGraph;

namespace {

ComplexRational cr(long re, long im) {
  return ComplexRational{Rational(re), Rational(im)};
}

}  // namespace

TEST_CASE("bound_B pinned values") {
  CHECK(matchcf::bound_B(WeightedGraph::create(1, {})) == Rational(0));
  CHECK(matchcf::bound_B(WeightedGraph::create(2, {{0, 1, Rational(9)}})) == Rational(9, 4));
  CHECK(matchcf::bound_B(matchcf::complete_graph(3)) == Rational(1));
  // Unequal rows: the bound comes from the best row after dropping its
  // smallest entry, and absent edges count as zero entries.
  const WeightedGraph path = WeightedGraph::create(
      4, {{0, 1, Rational(3, 4)}, {1, 2, Rational(1, 2)}, {2, 3, Rational(2)}});
  CHECK(matchcf::bound_B(path) == Rational(5, 2));
  CHECK(matchcf::bound_B(matchcf::complete_graph(4)) == Rational(2));
  // Star center: all entries are real edges, so the drop costs a full edge.
  CHECK(matchcf::bound_B(matchcf::star_graph(5)) == Rational(3));
}

TEST_CASE("bound_B case split at small n") {
  // Two vertices use lambda/4 even when that disagrees with the n >= 3 rule.
  const WeightedGraph k2 = WeightedGraph::create(2, {{0, 1, Rational(1, 3)}});
  CHECK(matchcf::bound_B(k2) == Rational(1, 12));
  // Two surviving vertices of a bigger graph behave the same way.
  const WeightedGraph g = matchcf::complete_graph(4)
                              .without(VertexSet::of({2, 3}));
  CHECK(matchcf::bound_B(g) == Rational(1, 4));
  // An edgeless pair and a lone vertex are zero.
  CHECK(matchcf::bound_B(WeightedGraph::create(2, {})) == Rational(0));
  CHECK(matchcf::bound_B(matchcf::complete_graph(3).without(VertexSet::of({0, 1}))) ==
        Rational(0));
}

TEST_CASE("bound_B never grows under vertex deletion for n >= 4") {
  for (std::uint64_t s = 0; s < 15; ++s) {
    SampleRng rng(61, s);
    const int n = 4 + static_cast<int>(rng.below(3));
    const WeightedGraph g = matchcf::random_weighted_graph(n, rng);
    const Rational b = matchcf::bound_B(g);
    g.vertices().for_each([&](int i) {
      CAPTURE(s);
      CAPTURE(i);
      CHECK(matchcf::bound_B(g.without(VertexSet::single(i))) <= b);
    });
  }
  // The 3-to-2 step switches formulas; lambda/4 still sits below the bound.
  const WeightedGraph tri = matchcf::complete_graph(3);
  CHECK(matchcf::bound_B(tri.without(VertexSet::single(0))) == Rational(1, 4));
  CHECK(matchcf::bound_B(tri.without(VertexSet::single(0))) <= matchcf::bound_B(tri));
}

TEST_CASE("region membership is exact") {
  const Region half = Region::right_half_plane();
  CHECK(half.contains(cr(1, -5)));
  CHECK(half.contains(ComplexRational{Rational(1, 1000000), Rational(0)}));
  CHECK_FALSE(half.contains(cr(0, 3)));
  CHECK_FALSE(half.contains(cr(-1, 0)));
  CHECK(half.name() == std::string("halfplane"));

  const Region disk = Region::outside_disk(Rational(9));
  CHECK_FALSE(disk.contains(cr(3, 0)));  // norm2 == 9 is not outside
  CHECK(disk.contains(ComplexRational{Rational(3), Rational(1, 100)}));
  CHECK(disk.contains(cr(0, -4)));
  CHECK(disk.name() == std::string("disk"));

  const Region for_k2 = Region::outside_disk_for(
      WeightedGraph::create(2, {{0, 1, Rational(9)}}));
  CHECK(for_k2.four_B == Rational(9));
}

TEST_CASE("sample_point stays inside its region") {
  SampleRng rng(67, 0);
  const Region half = Region::right_half_plane();
  const Region disk = Region::outside_disk(Rational(37, 3));
  for (int k = 0; k < 300; ++k) {
    const ComplexRational h = sample_point(half, rng);
    CHECK(half.contains(h));
    const ComplexRational d = sample_point(disk, rng);
    CHECK(disk.contains(d));
    CHECK_FALSE(d.is_zero());
  }
  // Zero-radius disk still yields nonzero points usable as divisors.
  const Region degenerate = Region::outside_disk(Rational(0));
  for (int k = 0; k < 50; ++k) {
    CHECK_FALSE(sample_point(degenerate, rng).is_zero());
  }
}

TEST_CASE("f_eval pinned values") {
  const WeightedGraph k2 = matchcf::complete_graph(2);
  // Empty index set: the function is the coordinate itself.
  CHECK(matchcf::f_eval(k2, 0, VertexSet{}, {cr(4, 1), cr(9, 9)}) == cr(4, 1));
  CHECK(matchcf::f_eval(k2, 0, VertexSet::single(1), {cr(1, 0), cr(1, 0)}) == cr(2, 0));
  // Unit triangle at (1, i, -i): 1 + 1/i + 1/(-i) = 1.
  const WeightedGraph tri = matchcf::complete_graph(3);
  CHECK(matchcf::f_eval(tri, 0, VertexSet::of({1, 2}), {cr(1, 0), cr(0, 1), cr(0, -1)}) ==
        cr(1, 0));
}

TEST_CASE("f_eval rejects bad arguments") {
  const WeightedGraph tri = matchcf::complete_graph(3);
  auto code_of = [&](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::syntax_error;
  };
  CHECK(code_of([&] { matchcf::f_eval(tri, 0, VertexSet::single(0), {cr(1, 0), cr(1, 0), cr(1, 0)}); }) ==
        ErrorCode::invalid_argument);
  CHECK(code_of([&] { matchcf::f_eval(tri, 0, VertexSet::single(1), {cr(1, 0)}); }) ==
        ErrorCode::arity_mismatch);
  CHECK(code_of([&] { matchcf::f_eval(tri, 5, VertexSet{}, {cr(1, 0), cr(1, 0), cr(1, 0)}); }) ==
        ErrorCode::index_out_of_range);
  CHECK(code_of([&] { matchcf::f_eval(tri, 0, VertexSet::of({3}), {cr(1, 0), cr(1, 0), cr(1, 0)}); }) ==
        ErrorCode::invalid_mask);
  try {
    matchcf::f_eval(tri, 0, VertexSet::of({1, 2}), {cr(1, 0), cr(0, 0), cr(1, 0)});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::division_by_zero);
    CHECK(std::string(e.what()).find("1") != std::string::npos);
  }
  // A zero coordinate on an absent edge term is harmless.
  const WeightedGraph path = matchcf::path_graph(3);
  CHECK(matchcf::f_eval(path, 0, VertexSet::of({1, 2}), {cr(5, 0), cr(1, 0), cr(0, 0)}) ==
        cr(6, 0));
}

TEST_CASE("zero-free sweeps find no failures on theorem ground") {
  const WeightedGraph tri = matchcf::complete_graph(3);
  for (const Region& region : {Region::right_half_plane(), Region::outside_disk_for(tri)}) {
    const VerificationReport r = matchcf::verify_zero_free(tri, region, 400, 11);
    CHECK(r.ok());
    CHECK(r.samples == 400);
    CHECK(r.property == "zerofree");
    CHECK(r.region == region.name());
  }
}

TEST_CASE("mapping sweeps find no failures on theorem ground") {
  SampleRng rng(71, 1);
  const WeightedGraph g = matchcf::random_weighted_graph(5, rng);
  for (const Region& region : {Region::right_half_plane(), Region::outside_disk_for(g)}) {
    const VerificationReport r = matchcf::check_mapping_lemma(g, region, 400, 3);
    CHECK(r.ok());
    CHECK(r.property == "mapping");
  }
  // Single vertex: only the empty index set exists and f is the identity.
  const WeightedGraph one = WeightedGraph::create(1, {});
  CHECK(matchcf::check_mapping_lemma(one, Region::right_half_plane(), 50, 0).ok());
  CHECK(matchcf::check_mapping_lemma(one, Region::outside_disk_for(one), 50, 0).ok());
}

TEST_CASE("serial and parallel sweeps produce identical reports") {
  const WeightedGraph g = matchcf::complete_graph(5);
  for (const Region& region : {Region::right_half_plane(), Region::outside_disk_for(g)}) {
    const VerificationReport a =
        matchcf::verify_zero_free(g, region, 600, 5, matchcf::Exec::serial);
    const VerificationReport b =
        matchcf::verify_zero_free(g, region, 600, 5, matchcf::Exec::parallel);
    CHECK(a.to_json() == b.to_json());
    const VerificationReport c =
        matchcf::check_mapping_lemma(g, region, 600, 5, matchcf::Exec::serial);
    const VerificationReport d =
        matchcf::check_mapping_lemma(g, region, 600, 5, matchcf::Exec::parallel);
    CHECK(c.to_json() == d.to_json());
  }
}

TEST_CASE("report JSON is stable and ordered") {
  VerificationReport r;
  r.property = "zerofree";
  r.graph_hash = "abc";
  r.region = "disk";
  r.samples = 2;
  r.seed = 7;
  r.failures.push_back(matchcf::Failure{"(1, 2)", "0"});
  r.elapsed_ms = 12.5;
  CHECK(r.to_json() ==
        "{\n"
        "  \"property\": \"zerofree\",\n"
        "  \"graph_hash\": \"abc\",\n"
        "  \"region\": \"disk\",\n"
        "  \"samples\": 2,\n"
        "  \"seed\": 7,\n"
        "  \"failures\": [\n"
        "    {\n"
        "      \"point\": \"(1, 2)\",\n"
        "      \"value\": \"0\"\n"
        "    }\n"
        "  ]\n"
        "}");
  CHECK(r.to_json(true).find("\"elapsed_ms\"") != std::string::npos);
  CHECK_FALSE(r.ok());
}

TEST_CASE("univariate_roots pinned spectra") {
  // mu(K2) = x^2 + 1 has roots at plus and minus i.
  const UnivariatePoly k2{{Rational(1), Rational(0), Rational(1)}};
  auto roots = matchcf::univariate_roots(k2);
  REQUIRE(roots.size() == 2);
  for (const Root& r : roots) {
    CHECK(std::abs(r.re) < 1e-9);
    CHECK(std::abs(std::abs(r.im) - 1.0) < 1e-9);
  }
  CHECK(roots[0].im * roots[1].im < 0);

  // mu(K3) = x^3 + 3x has roots 0 and plus/minus sqrt(3) i.
  const UnivariatePoly k3{{Rational(0), Rational(3), Rational(0), Rational(1)}};
  roots = matchcf::univariate_roots(k3);
  REQUIRE(roots.size() == 3);
  int zero = 0, off = 0;
  for (const Root& r : roots) {
    if (std::abs(r.im) < 1e-9) {
      ++zero;
      CHECK(std::abs(r.re) < 1e-12);
    } else {
      ++off;
      CHECK(std::abs(std::abs(r.im) - std::sqrt(3.0)) < 1e-9);
    }
  }
  CHECK(zero == 1);
  CHECK(off == 2);

  // K2 with weight 9: x^2 + 9, roots at plus and minus 3i.
  const UnivariatePoly lam9{{Rational(9), Rational(0), Rational(1)}};
  roots = matchcf::univariate_roots(lam9);
  REQUIRE(roots.size() == 2);
  for (const Root& r : roots) {
    CHECK(std::abs(std::abs(r.im) - 3.0) < 1e-9);
  }
}

TEST_CASE("univariate_roots handles zero roots and scaling") {
  // x^3 alone: triple zero root.
  const UnivariatePoly cube{{Rational(0), Rational(0), Rational(0), Rational(1)}};
  auto roots = matchcf::univariate_roots(cube);
  REQUIRE(roots.size() == 3);
  for (const Root& r : roots) {
    CHECK(std::abs(r.re) == 0.0);
    CHECK(std::abs(r.im) == 0.0);
  }
  // Degree zero input is rejected; callers strip constants beforehand.
  CHECK_THROWS_AS(matchcf::univariate_roots(UnivariatePoly{{Rational(5)}}), Error);
  CHECK_THROWS_AS(matchcf::univariate_roots(UnivariatePoly{{Rational(0)}}), Error);
}

TEST_CASE("check_root_bound pinned cases") {
  // Single vertex: mu = x, root 0, bound 0; the root sits on the boundary.
  CHECK(matchcf::check_root_bound(WeightedGraph::create(1, {})).ok());
  // K2 with weight 9: roots at 3i exactly on the circle of radius 2 sqrt(B).
  const WeightedGraph k2 = WeightedGraph::create(2, {{0, 1, Rational(9)}});
  const VerificationReport r = matchcf::check_root_bound(k2);
  CHECK(r.ok());
  CHECK(r.property == "roots");
  CHECK(r.samples == 2);
  CHECK(matchcf::check_root_bound(matchcf::complete_graph(5)).ok());
  CHECK(matchcf::check_root_bound(matchcf::star_graph(6)).ok());
}

TEST_CASE("check_root_bound on random weighted graphs") {
  for (std::uint64_t s = 0; s < 10; ++s) {
    SampleRng rng(73, s);
    const int n = 1 + static_cast<int>(rng.below(7));
    const WeightedGraph g = matchcf::random_weighted_graph(n, rng);
    CAPTURE(s);
    CHECK(matchcf::check_root_bound(g).ok());
  }
}
