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
//
// Times the OpenMP sweeps against their serial reference paths. Usage:
//
//   matchcf_bench [scan_n] [sweep_samples]
//
// Defaults keep the run under a minute on one core. The serial and parallel
// variants must produce identical results; this binary also rechecks that.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

#include <omp.h>

#include "matchcf/corpus.hpp"
#include "matchcf/exec.hpp"
#include "matchcf/fastscan.hpp"
#include "matchcf/hl.hpp"
#include "matchcf/rng.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double time_ms(const std::function<void()>& fn) {
  const auto start = Clock::now();
  fn();
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void report(const char* name, double serial_ms, double parallel_ms, bool equal) {
  std::printf("%-28s serial %10.1f ms   parallel %10.1f ms   speedup %5.2fx   %s\n",
              name, serial_ms, parallel_ms,
              parallel_ms > 0 ? serial_ms / parallel_ms : 0.0,
              equal ? "results equal" : "RESULTS DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
  const int scan_n = argc > 1 ? std::atoi(argv[1]) : 7;
  const std::uint64_t samples = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 200000;
  std::printf("threads available: %d\n\n", omp_get_max_threads());

  {
    matchcf::ScanResult rs, rp;
    const double ts = time_ms([&] { rs = matchcf::scan_root_bounds(scan_n, 1e-8, matchcf::Exec::serial); });
    const double tp = time_ms([&] { rp = matchcf::scan_root_bounds(scan_n, 1e-8, matchcf::Exec::parallel); });
    const bool equal = rs.graphs == rp.graphs && rs.signatures == rp.signatures &&
                       rs.failing_masks == rp.failing_masks;
    report(("root scan n=" + std::to_string(scan_n)).c_str(), ts, tp, equal);
    std::printf("  %llu connected graphs, %llu distinct signatures\n\n",
                static_cast<unsigned long long>(rs.graphs),
                static_cast<unsigned long long>(rs.signatures));
    if (scan_n <= 5) {
      matchcf::ScanResult ref;
      const double tr = time_ms([&] { ref = matchcf::reference_root_bounds(scan_n, 1e-8); });
      std::printf("  generic per-graph reference: %.1f ms (%.0fx the packed kernel)\n\n",
                  tr, ts > 0 ? tr / ts : 0.0);
    }
  }

  {
    matchcf::SampleRng rng(2024, 0);
    const matchcf::WeightedGraph g = matchcf::random_weighted_graph(6, rng);
    const matchcf::Region region = matchcf::Region::outside_disk_for(g);
    matchcf::VerificationReport a, b;
    const double ts =
        time_ms([&] { a = matchcf::verify_zero_free(g, region, samples, 1, matchcf::Exec::serial); });
    const double tp =
        time_ms([&] { b = matchcf::verify_zero_free(g, region, samples, 1, matchcf::Exec::parallel); });
    report("zero-free sweep (disk)", ts, tp, a.to_json() == b.to_json());
  }

  {
    matchcf::SampleRng rng(2024, 1);
    const matchcf::WeightedGraph g = matchcf::random_weighted_graph(6, rng);
    const matchcf::Region region = matchcf::Region::right_half_plane();
    matchcf::VerificationReport a, b;
    const double ts = time_ms(
        [&] { a = matchcf::check_mapping_lemma(g, region, samples, 1, matchcf::Exec::serial); });
    const double tp = time_ms(
        [&] { b = matchcf::check_mapping_lemma(g, region, samples, 1, matchcf::Exec::parallel); });
    report("mapping sweep (halfplane)", ts, tp, a.to_json() == b.to_json());
  }

  return 0;
}
