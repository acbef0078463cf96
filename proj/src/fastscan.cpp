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

#include "matchcf/fastscan.hpp"

#include <algorithm>
#include <unordered_map>

#include "matchcf/corpus.hpp"
#include "matchcf/errors.hpp"
#include "matchcf/hl.hpp"
#include "matchcf/matching.hpp"
#include "matchcf/polynomial.hpp"

namespace matchcf {

namespace {

constexpr int kScanMaxVertices = 8;
constexpr std::size_t kMaxReportedFailures = 16;

void check_scan_size(int n) {
  if (n < 1 || n > kScanMaxVertices) {
    throw Error(ErrorCode::invalid_argument,
                "scan kernel covers 1 to 8 vertices, got " + std::to_string(n));
  }
}

// Root check for one signature: mu(x) = sum_k m_k x^(n-2k) with the packed
// counts as coefficients, all roots within tol of the imaginary axis and of
// the closed disk |z|^2 <= 4B.
bool signature_passes(int n, std::uint64_t packed, std::uint32_t four_b, double tol) {
  UnivariatePoly p;
  p.coeffs.assign(n + 1, Rational(0));
  for (int k = 0; 2 * k <= n; ++k) {
    p.coeffs[n - 2 * k] = static_cast<unsigned long>((packed >> (10 * k)) & 1023);
  }
  for (const Root& r : univariate_roots(p, 1000, tol)) {
    if (std::abs(r.re) > tol) return false;
    if (r.re * r.re + r.im * r.im > static_cast<double>(four_b) + tol) return false;
  }
  return true;
}

struct ScanState {
  std::uint64_t graphs = 0;
  std::unordered_map<std::uint64_t, bool> cache;
  std::vector<std::uint64_t> failing;
};

void scan_range(int n, std::uint64_t first, std::uint64_t last, double tol,
                ScanState& state) {
  for (std::uint64_t mask = first; mask < last; ++mask) {
    if (!edge_mask_connected(n, mask)) continue;
    ++state.graphs;
    const std::array<std::uint8_t, 8> adj = adjacency_rows(n, mask);
    const std::uint64_t packed = packed_matching_counts(n, adj);
    const std::uint32_t four_b = unit_four_b(n, adj);
    const std::uint64_t key = (packed << 5) | four_b;
    auto [it, inserted] = state.cache.try_emplace(key, false);
    if (inserted) it->second = signature_passes(n, packed, four_b, tol);
    if (!it->second && state.failing.size() < kMaxReportedFailures) {
      state.failing.push_back(mask);
    }
  }
}

}  // namespace

std::array<std::uint8_t, 8> adjacency_rows(int n, std::uint64_t mask) {
  std::array<std::uint8_t, 8> adj = {};
  int index = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v, ++index) {
      if ((mask >> index) & 1) {
        adj[u] |= static_cast<std::uint8_t>(1u << v);
        adj[v] |= static_cast<std::uint8_t>(1u << u);
      }
    }
  }
  return adj;
}

std::uint64_t packed_matching_counts(int n, const std::array<std::uint8_t, 8>& adj) {
  std::uint64_t dp[256];
  dp[0] = 1;
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  for (std::uint32_t s = 1; s <= full; ++s) {
    const int i = __builtin_ctz(s);
    const std::uint32_t rest = s & (s - 1);
    std::uint64_t v = dp[rest];
    // Matchings either leave i uncovered or pair it with a neighbor: the
    // paired case contributes one extra edge, hence the lane shift.
    for (std::uint32_t nb = adj[i] & rest; nb; nb &= nb - 1) {
      v += dp[rest & ~(std::uint32_t{1} << __builtin_ctz(nb))] << 10;
    }
    dp[s] = v;
  }
  return dp[full];
}

std::vector<std::uint64_t> matching_count_vector(int n, std::uint64_t mask) {
  check_scan_size(n);
  const std::uint64_t packed = packed_matching_counts(n, adjacency_rows(n, mask));
  std::vector<std::uint64_t> counts;
  for (int k = 0; 2 * k <= n; ++k) counts.push_back((packed >> (10 * k)) & 1023);
  return counts;
}

std::uint32_t unit_four_b(int n, const std::array<std::uint8_t, 8>& adj) {
  if (n == 1) return 0;
  if (n == 2) return adj[0] != 0 ? 1 : 0;  // B = lambda/4 = 1/4 when the edge exists
  std::uint32_t best = 0;
  for (int j = 0; j < n; ++j) {
    const std::uint32_t deg = __builtin_popcount(adj[j]);
    // Row sum minus the smallest entry: drops a zero unless j sees everyone.
    const std::uint32_t value = deg == static_cast<std::uint32_t>(n - 1) ? deg - 1 : deg;
    best = std::max(best, value);
  }
  return 4 * best;
}

ScanResult scan_root_bounds(int n, double tol, Exec exec) {
  check_scan_size(n);
  const std::uint64_t masks = std::uint64_t{1} << pair_count(n);

  ScanResult result;
  if (exec == Exec::serial) {
    ScanState state;
    state.cache.reserve(1u << 16);
    scan_range(n, 0, masks, tol, state);
    result.graphs = state.graphs;
    result.signatures = state.cache.size();
    result.failing_masks = std::move(state.failing);
  } else {
    // Contiguous blocks keep nearby masks (which share signatures) in the
    // same thread's cache.
    const std::uint64_t blocks = std::min<std::uint64_t>(masks, 256);
    std::unordered_map<std::uint64_t, bool> merged;
    merged.reserve(1u << 16);
#pragma omp parallel
    {
      ScanState state;
      state.cache.reserve(1u << 16);
#pragma omp for schedule(dynamic, 1)
      for (std::int64_t b = 0; b < static_cast<std::int64_t>(blocks); ++b) {
        const std::uint64_t first = masks * b / blocks;
        const std::uint64_t last = masks * (b + 1) / blocks;
        scan_range(n, first, last, tol, state);
      }
#pragma omp critical(matchcf_scan_merge)
      {
        result.graphs += state.graphs;
        merged.insert(state.cache.begin(), state.cache.end());
        result.failing_masks.insert(result.failing_masks.end(), state.failing.begin(),
                                    state.failing.end());
      }
    }
    result.signatures = merged.size();
    std::sort(result.failing_masks.begin(), result.failing_masks.end());
    if (result.failing_masks.size() > kMaxReportedFailures) {
      result.failing_masks.resize(kMaxReportedFailures);
    }
  }
  return result;
}

ScanResult reference_root_bounds(int n, double tol) {
  check_scan_size(n);
  const std::uint64_t masks = std::uint64_t{1} << pair_count(n);
  ScanResult result;
  for (std::uint64_t mask = 0; mask < masks; ++mask) {
    if (!edge_mask_connected(n, mask)) continue;
    ++result.graphs;
    const VerificationReport report = check_root_bound(unit_graph_from_mask(n, mask), tol);
    if (!report.ok() && result.failing_masks.size() < kMaxReportedFailures) {
      result.failing_masks.push_back(mask);
    }
  }
  return result;
}

}  // namespace matchcf
