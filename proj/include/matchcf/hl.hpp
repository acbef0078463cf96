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

#ifndef MATCHCF_HL_HPP
#define MATCHCF_HL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "matchcf/exec.hpp"
#include "matchcf/graph.hpp"
#include "matchcf/polynomial.hpp"
#include "matchcf/rng.hpp"

namespace matchcf {

// The edge-weight bound: 0 for a single vertex, lambda/4 for two vertices,
// and for n >= 3 the maximum over vertices j of the largest sum of n-2
// entries of row j, i.e. the row sum minus the smallest off-diagonal entry.
// Deleting a vertex never increases it.
Rational bound_B(const WeightedGraph& g);

// A zero-free region for the vertex variables, with exactly decidable
// membership: Re(x) > 0, or |x|^2 > 4B held as the exact rational four_B.
struct Region {
  enum class Kind { right_half_plane, outside_disk };

  Kind kind = Kind::right_half_plane;
  Rational four_B;  // only meaningful for outside_disk

  static Region right_half_plane() { return Region{}; }
  static Region outside_disk(Rational four_b) {
    return Region{Kind::outside_disk, std::move(four_b)};
  }
  // The disk region matching a concrete graph: four_B = 4 * bound_B(g).
  static Region outside_disk_for(const WeightedGraph& g);

  bool contains(const ComplexRational& z) const {
    return kind == Kind::right_half_plane ? z.re > 0 : z.norm2() > four_B;
  }

  // "halfplane" or "disk", as used by the CLI and reports.
  const char* name() const {
    return kind == Kind::right_half_plane ? "halfplane" : "disk";
  }
};

// One region coordinate from the sample stream. Right half plane: re from
// the positive grid {2^k/8, k=0..9}, im from the symmetric grid {0, +-2^k/8}.
// Outside disk: both coordinates from the grid {R0*(k-16)/8, k=0..32} with
// R0 = 2*(1 + ceil(sqrt(B))), rejecting pairs until re^2 + im^2 > 4B. Either
// way the point is exactly in the region (and never zero).
ComplexRational sample_point(const Region& region, SampleRng& rng);

// x_j + sum over k in A of lambda_jk / x_k. Requires j not in A and x_k != 0
// for every k in A with a positive weight to j.
ComplexRational f_eval(const WeightedGraph& g, int j, VertexSet a,
                       const std::vector<ComplexRational>& x);

struct Failure {
  std::string point;
  std::string value;
};

struct VerificationReport {
  std::string property;
  std::string graph_hash;
  std::string region = "none";
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<Failure> failures;
  double elapsed_ms = 0.0;

  bool ok() const { return failures.empty(); }

  // The fixed-key JSON rendering used by the CLI. Identical inputs yield
  // byte-identical text; the elapsed time is only emitted on request since
  // it varies run to run.
  std::string to_json(bool include_timing = false) const;
};

// Draws `samples` points of R^n (per-sample RNG stream (seed, index)) and
// checks exactly that the matching polynomial does not vanish at any of
// them.
VerificationReport verify_zero_free(const WeightedGraph& g, const Region& region,
                                    std::uint64_t samples, std::uint64_t seed,
                                    Exec exec = Exec::parallel);

// Per sample: draws j, then A among the subsets of the other vertices with
// |A| <= n-2, then x in R^n, and checks the mapped value exactly:
//   half plane: Re f_{j,A}(x) > 0  (the image stays in the region)
//   disk:       |f_{j,A}(x)|^2 > B (the image stays clear of zero with the
//               margin the induction over vertex counts consumes; the image
//               need not stay outside the full 2*sqrt(B) disk)
// Each sample also checks f_{j,A}(x) != 0 for every full set A (|A| = n-1).
VerificationReport check_mapping_lemma(const WeightedGraph& g, const Region& region,
                                       std::uint64_t samples, std::uint64_t seed,
                                       Exec exec = Exec::parallel);

// Approximate complex roots, with multiplicity, of a univariate polynomial
// of degree >= 1. Exact zero roots are split off first; the rest come from
// simultaneous iteration in double precision. Every returned root r is
// residual-certified: |p(r)| / |lead| <= tol * max(1, |r|)^degree.
struct Root {
  double re;
  double im;
};

std::vector<Root> univariate_roots(const UnivariatePoly& p, int max_iter = 1000,
                                   double tol = 1e-8);

// Locates the roots of the univariate specialization of mu(G) and checks
// each lies on the imaginary axis (|Re r| <= tol) inside the closed disk
// of radius 2*sqrt(B) (re^2 + im^2 <= 4B + tol).
VerificationReport check_root_bound(const WeightedGraph& g, double tol = 1e-8);

}  // namespace matchcf

#endif  // MATCHCF_HL_HPP
