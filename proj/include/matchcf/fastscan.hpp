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

#ifndef MATCHCF_FASTSCAN_HPP
#define MATCHCF_FASTSCAN_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "matchcf/exec.hpp"

namespace matchcf {

// Adjacency rows of an edge mask in the corpus pair ordering, n <= 8.
std::array<std::uint8_t, 8> adjacency_rows(int n, std::uint64_t mask);

// Matching counts by size for a unit-weight graph on n <= 8 vertices, packed
// into 10-bit lanes: lane k holds the number of matchings with k edges. The
// largest lane value over all such graphs is 420 (3-edge matchings of K8),
// so lanes never overflow into each other.
std::uint64_t packed_matching_counts(int n, const std::array<std::uint8_t, 8>& adj);

// Decoded counts m_0 .. m_floor(n/2) for the mask graph.
std::vector<std::uint64_t> matching_count_vector(int n, std::uint64_t mask);

// 4 * B for a unit-weight graph, which is an integer for every n (the n = 2
// bound is 1/4).
std::uint32_t unit_four_b(int n, const std::array<std::uint8_t, 8>& adj);

struct ScanResult {
  std::uint64_t graphs = 0;      // connected graphs checked
  std::uint64_t signatures = 0;  // distinct (matching counts, B) pairs seen
  std::vector<std::uint64_t> failing_masks;

  bool ok() const { return failing_masks.empty(); }
};

// Root-bound check over every connected unit-weight labeled graph on exactly
// n vertices: all 2^(n(n-1)/2) edge masks, keeping the connected ones. The
// univariate matching polynomial and the bound depend only on the packed
// matching counts and B, so roots are located once per distinct signature.
ScanResult scan_root_bounds(int n, double tol, Exec exec = Exec::parallel);

// The same sweep through the generic exact pipeline, one graph at a time
// with no deduplication. Slow reference implementation for testing and
// benchmarking the kernel; practical for n <= 6.
ScanResult reference_root_bounds(int n, double tol);

}  // namespace matchcf

#endif  // MATCHCF_FASTSCAN_HPP
